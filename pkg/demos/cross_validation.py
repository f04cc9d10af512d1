#!/usr/bin/env python3
"""10-fold cross-validation on the bundled sample corpus.

Prints per-fold accuracy for the first-guess tagger and the learned
model, the equal-weight means, and the depth curve from the first
fold (accuracy as the tree is cut off at increasing depths).
"""

from rippletag.data import load_toy_corpus
from rippletag.evaluation import cross_validate

report = cross_validate(load_toy_corpus(), k=10)

print("fold  train  test  rules  first-guess  final")
for row in report["folds"]:
    print(f"{row['fold']:>4}  {row['train_tokens']:>5}  {row['test_tokens']:>4}  "
          f"{row['rules']:>5}  {row['initial']['accuracy']:>11.4f}  "
          f"{row['final']['accuracy']:.4f}")

mean = report["mean"]
print(f"\nmean  first-guess {mean['initial']['accuracy']:.4f}  "
      f"final {mean['final']['accuracy']:.4f}  "
      f"(+{(mean['final']['accuracy'] - mean['initial']['accuracy']) * 100:.2f} points)")
print(f"mean training time {mean['train_time_sec']:.2f}s per fold")

print("\ndepth curve (fold 1):")
for row in report["level_curve"]:
    print(f"    depth {row['level']}: {row['rules']:>3} rules, "
          f"accuracy {row['accuracy']:.4f}")

speed = report["speed"]
print(f"\ntagging speed (fold 1): {speed['tokens_per_sec']:,.0f} tokens/sec "
      f"over {speed['repeats']} repeats")
