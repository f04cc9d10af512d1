from pathlib import Path

import pytest

from rippletag import load_toy_corpus, train_model

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def toy():
    return load_toy_corpus()


@pytest.fixture(scope="session")
def toy_model(toy):
    return train_model(toy)


@pytest.fixture(scope="session")
def example_tree_text():
    return (DATA_DIR / "worked_example.rdr").read_text(encoding="utf-8")
