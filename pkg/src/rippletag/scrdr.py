"""Exception-structured rule tree: the data structure behind the tagger.

Each node holds a rule, a condition over a 13-field context object and a
conclusion tag.  Evaluation starts at an always-true root and repeatedly
takes the "except" edge when a condition holds and the "if-not" edge
when it does not; the answer comes from the last node that fired.  New
knowledge is added as an exception under the node that produced a wrong
answer, so earlier behaviour is only ever overridden, never edited.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

FIELD_NAMES = (
    "prev2Word",
    "prev2Tag",
    "prev1Word",
    "prev1Tag",
    "word",
    "currentTag",
    "next1Word",
    "next1Tag",
    "next2Word",
    "next2Tag",
    "suffix2",
    "suffix3",
    "suffix4",
)

FIELD_INDEX = {name: i for i, name in enumerate(FIELD_NAMES)}


class TreeFormatError(ValueError):
    """Malformed serialized tree."""


class TagObject(NamedTuple):
    """Context for one token: a two-word window each side plus suffixes.

    Fields outside the sentence, and suffixes as long as the word
    itself, are None.
    """

    prev2Word: str | None
    prev2Tag: str | None
    prev1Word: str | None
    prev1Tag: str | None
    word: str
    currentTag: str
    next1Word: str | None
    next1Tag: str | None
    next2Word: str | None
    next2Tag: str | None
    suffix2: str | None
    suffix3: str | None
    suffix4: str | None


def make_tag_objects(words: Sequence[str], tags: Sequence[str]) -> list[TagObject]:
    """Build the per-token context objects for one sentence."""
    if len(words) != len(tags):
        raise ValueError(f"{len(words)} words but {len(tags)} tags")
    n = len(words)
    objects = []
    for i, word in enumerate(words):
        objects.append(
            TagObject(
                prev2Word=words[i - 2] if i >= 2 else None,
                prev2Tag=tags[i - 2] if i >= 2 else None,
                prev1Word=words[i - 1] if i >= 1 else None,
                prev1Tag=tags[i - 1] if i >= 1 else None,
                word=word,
                currentTag=tags[i],
                next1Word=words[i + 1] if i + 1 < n else None,
                next1Tag=tags[i + 1] if i + 1 < n else None,
                next2Word=words[i + 2] if i + 2 < n else None,
                next2Tag=tags[i + 2] if i + 2 < n else None,
                suffix2=word[-2:] if len(word) > 2 else None,
                suffix3=word[-3:] if len(word) > 3 else None,
                suffix4=word[-4:] if len(word) > 4 else None,
            )
        )
    return objects


class Rule(NamedTuple):
    """Condition plus conclusion.

    ``tests`` is a tuple of (field index, required value) pairs, sorted
    by field index; the empty tuple is the always-true condition.  A
    None field value never satisfies a test.
    """

    tests: tuple[tuple[int, str], ...]
    conclusion: str

    def matches(self, obj: TagObject) -> bool:
        return all(obj[i] == value for i, value in self.tests)


TRUE_RULE = Rule((), "")


class Node:
    """Tree node; level is the number of except edges above it."""

    __slots__ = ("rule", "level", "except_child", "ifnot_child")

    def __init__(
        self,
        rule: Rule,
        level: int,
        except_child: "Node | None" = None,
        ifnot_child: "Node | None" = None,
    ) -> None:
        self.rule = rule
        self.level = level
        self.except_child = except_child
        self.ifnot_child = ifnot_child

    def __repr__(self) -> str:
        return f"Node(level={self.level}, {render_rule(self.rule)!r})"


def new_root() -> Node:
    return Node(TRUE_RULE, 0)


class EvalResult(NamedTuple):
    node: Node
    path: tuple[Node, ...]


def evaluate(root: Node, obj: TagObject) -> EvalResult:
    """Walk the tree for one context object.

    Returns the last node whose condition held and the full visit
    path, failed nodes included.  The root always fires, so the result
    node is never None.
    """
    if root.rule.tests:
        raise ValueError("root rule must be the always-true rule")
    visited = [root]
    last_fired = root
    current = root.except_child
    while current is not None:
        visited.append(current)
        if current.rule.matches(obj):
            last_fired = current
            current = current.except_child
        else:
            current = current.ifnot_child
    return EvalResult(last_fired, tuple(visited))


def conclude(root: Node, obj: TagObject) -> str:
    return evaluate(root, obj).node.rule.conclusion


def insert_exception(parent: Node, rule: Rule) -> Node:
    """Attach a rule as an exception to parent.

    Goes into the empty except slot if there is one, otherwise onto the
    end of the existing exception's if-not chain.  Either way the new
    node sits one level below parent and is tried only when parent
    fires.
    """
    if not rule.tests:
        raise ValueError("cannot insert an always-true rule")
    if not rule.conclusion:
        raise ValueError("cannot insert a rule with an empty conclusion")
    node = Node(rule, parent.level + 1)
    if parent.except_child is None:
        parent.except_child = node
    else:
        tail = parent.except_child
        while tail.ifnot_child is not None:
            tail = tail.ifnot_child
        tail.ifnot_child = node
    return node


def iter_nodes(root: Node) -> Iterator[Node]:
    """All nodes in serialization order: node, exceptions, then if-nots."""
    current: Node | None = root
    while current is not None:
        yield current
        if current.except_child is not None:
            yield from iter_nodes(current.except_child)
        current = current.ifnot_child


def count_rules(root: Node) -> int:
    """Non-root nodes in the tree."""
    return sum(1 for _ in iter_nodes(root)) - 1


def layer_census(root: Node) -> dict[int, int]:
    census: dict[int, int] = {}
    for node in iter_nodes(root):
        if node.level > 0:
            census[node.level] = census.get(node.level, 0) + 1
    return dict(sorted(census.items()))


def truncate(root: Node, max_level: int) -> Node:
    """Copy of the tree keeping only nodes at or below max_level."""
    if max_level < 0:
        raise ValueError(f"max_level must be >= 0, got {max_level}")

    def copy_chain(node: Node) -> Node:
        head: Node | None = None
        prev: Node | None = None
        current: Node | None = node
        while current is not None:
            clone = Node(current.rule, current.level)
            child = current.except_child
            if child is not None and child.level <= max_level:
                clone.except_child = copy_chain(child)
            if prev is None:
                head = clone
            else:
                prev.ifnot_child = clone
            prev = clone
            current = current.ifnot_child
        assert head is not None
        return head

    return copy_chain(root)


def trees_equal(a: Node, b: Node) -> bool:
    """Structural equality: same rules, levels and wiring."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if x is None or y is None:
            if x is not y:
                return False
            continue
        if x.rule != y.rule or x.level != y.level:
            return False
        stack.append((x.except_child, y.except_child))
        stack.append((x.ifnot_child, y.ifnot_child))
    return True


def _escape(value: str) -> str:
    # the text form is line-based, so values must stay on one line
    if "\n" in value or "\r" in value:
        raise ValueError(f"rule value {value!r} contains a line break")
    return value.replace("\\", "\\\\").replace('"', '\\"')


def _parse_quoted(s: str, pos: int, where: str) -> tuple[str, int]:
    if pos >= len(s) or s[pos] != '"':
        raise TreeFormatError(f'{where}: expected \'"\' at column {pos + 1}')
    chars = []
    i = pos + 1
    while i < len(s):
        c = s[i]
        if c == "\\":
            if i + 1 >= len(s) or s[i + 1] not in ('\\', '"'):
                raise TreeFormatError(f"{where}: bad escape at column {i + 1}")
            chars.append(s[i + 1])
            i += 2
        elif c == '"':
            return "".join(chars), i + 1
        else:
            chars.append(c)
            i += 1
    raise TreeFormatError(f"{where}: unterminated string")


def render_rule(rule: Rule) -> str:
    if not rule.tests:
        condition = "True"
    else:
        condition = " and ".join(
            f'{FIELD_NAMES[i]} == "{_escape(v)}"' for i, v in rule.tests
        )
    return f'if {condition} then tag = "{_escape(rule.conclusion)}"'


def parse_rule_text(s: str, where: str = "rule") -> Rule:
    if not s.startswith("if "):
        raise TreeFormatError(f"{where}: rule must start with 'if '")
    pos = 3
    tests: list[tuple[int, str]] = []
    if s.startswith("True then tag = ", pos):
        pos += len("True then tag = ")
    else:
        while True:
            eq = s.find(" == ", pos)
            if eq < 0:
                raise TreeFormatError(f"{where}: expected 'field == \"value\"'")
            name = s[pos:eq]
            if name not in FIELD_INDEX:
                raise TreeFormatError(f"{where}: unknown field {name!r}")
            value, pos = _parse_quoted(s, eq + 4, where)
            tests.append((FIELD_INDEX[name], value))
            if s.startswith(" and ", pos):
                pos += len(" and ")
            elif s.startswith(" then tag = ", pos):
                pos += len(" then tag = ")
                break
            else:
                raise TreeFormatError(
                    f"{where}: expected ' and ' or ' then tag = ' at column {pos + 1}"
                )
        indices = [i for i, _ in tests]
        if len(set(indices)) != len(indices):
            raise TreeFormatError(f"{where}: a field is tested twice")
    conclusion, pos = _parse_quoted(s, pos, where)
    if pos != len(s):
        raise TreeFormatError(f"{where}: trailing text after conclusion")
    return Rule(tuple(sorted(tests)), conclusion)


def serialize_tree(root: Node) -> str:
    """Text form, one rule per line, tab indentation equal to level."""
    lines: list[str] = []

    def emit(node: Node, depth: int) -> None:
        current: Node | None = node
        while current is not None:
            lines.append("\t" * depth + render_rule(current.rule))
            if current.except_child is not None:
                emit(current.except_child, depth + 1)
            current = current.ifnot_child

    emit(root, 0)
    return "".join(line + "\n" for line in lines)


def parse_tree(text: str) -> Node:
    """Inverse of serialize_tree; validates structure as it reads."""
    root: Node | None = None
    last_at_depth: dict[int, Node] = {}
    prev_depth = -1
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        stripped = line.lstrip("\t")
        depth = len(line) - len(stripped)
        where = f"line {lineno}"
        rule = parse_rule_text(stripped, where)
        if root is None:
            if depth != 0:
                raise TreeFormatError(f"{where}: first rule must not be indented")
            if rule.tests or rule.conclusion:
                raise TreeFormatError(
                    f"{where}: the root rule must be 'if True then tag = \"\"'"
                )
            root = Node(rule, 0)
            last_at_depth[0] = root
            prev_depth = 0
            continue
        if depth == 0:
            raise TreeFormatError(f"{where}: only one unindented rule is allowed")
        if depth > prev_depth + 1:
            raise TreeFormatError(
                f"{where}: indentation jumps from {prev_depth} to {depth}"
            )
        if not rule.tests:
            raise TreeFormatError(f"{where}: only the root may be always-true")
        if not rule.conclusion:
            raise TreeFormatError(f"{where}: empty conclusion outside the root")
        node = Node(rule, depth)
        if depth == prev_depth + 1:
            last_at_depth[depth - 1].except_child = node
        else:
            sibling = last_at_depth[depth]
            while sibling.ifnot_child is not None:
                sibling = sibling.ifnot_child
            sibling.ifnot_child = node
        last_at_depth[depth] = node
        prev_depth = depth
    if root is None:
        raise TreeFormatError("empty tree text")
    return root
