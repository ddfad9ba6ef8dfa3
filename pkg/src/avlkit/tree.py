"""Self-balancing binary search tree with balance-factor bookkeeping.

Every node stores a balance factor: the height of its right subtree minus
the height of its left subtree, kept in {-1, 0, +1} between operations.
No heights are stored. Rebalancing uses the four classic rotations (LL and
RR single, LR and RL double); each rotation performed by insert or delete
is reported back to the caller as a RotationEvent so that callers can
count them.

Deletion of a node with two children is parameterized by a replacement
strategy: always take the in-order predecessor (rightmost of the left
subtree), always take the successor (leftmost of the right subtree), or
pick the taller subtree as indicated by the balance factor. The last
option usually leaves the node's balance within bounds and therefore
skips a rotation at that node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterator, NamedTuple, Optional


class StructuralError(Exception):
    """A structural precondition did not hold; indicates an internal bug."""


class RotationKind(Enum):
    LL = "LL"
    LR = "LR"
    RL = "RL"
    RR = "RR"


class Phase(Enum):
    INSERT = "insert"
    DELETE = "delete"


class RotationEvent(NamedTuple):
    kind: RotationKind
    phase: Phase


class ReplacementStrategy(Enum):
    """How a two-child deletion picks the node that fills the vacated slot."""

    RIGHTMOST_OF_LEFT = "rightmost_of_left"
    LEFTMOST_OF_RIGHT = "leftmost_of_right"
    OPTIMUM = "optimum"

    @property
    def label(self) -> str:
        return _STRATEGY_LABELS[self]


_STRATEGY_LABELS = {
    ReplacementStrategy.RIGHTMOST_OF_LEFT: "Rightmost of Left",
    ReplacementStrategy.LEFTMOST_OF_RIGHT: "Leftmost of Right",
    ReplacementStrategy.OPTIMUM: "Optimum",
}

#: Row order used by benchmark reports.
DEFAULT_STRATEGY_ORDER = (
    ReplacementStrategy.RIGHTMOST_OF_LEFT,
    ReplacementStrategy.LEFTMOST_OF_RIGHT,
    ReplacementStrategy.OPTIMUM,
)


class Direction(Enum):
    LEFT = "left"
    RIGHT = "right"


class Node:
    """One key-bearing node. `balance` is right height minus left height."""

    __slots__ = ("key", "value", "left", "right", "balance")

    def __init__(self, key, value=None):
        self.key = key
        self.value = value
        self.left: Optional[Node] = None
        self.right: Optional[Node] = None
        self.balance = 0

    def __repr__(self):
        return f"Node({self.key!r}, balance={self.balance})"


@dataclass
class Violation:
    kind: str
    key: Any
    detail: str


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class DeletionTrace:
    """Optional record of how a deletion was carried out, for demos and tests.

    Filled in only when the deleted node had two children.
    """

    two_child: bool = False
    node_balance: Optional[int] = None
    direction: Optional[Direction] = None
    replacement_key: Any = None


def rotate_ll(node: Node) -> Node:
    """Single rotation for a left-heavy node; returns the new subtree root.

    The left child is hoisted into the node's place. Balance updates assume
    the caller applies this only when rebalancing selects the LL case
    (node transiently at -2, left child at -1 or 0; the 0 case arises only
    while retracing a deletion).
    """
    pivot = node.left
    if pivot is None:
        raise StructuralError("LL rotation requires a left child")
    node.left = pivot.right
    pivot.right = node
    if pivot.balance == 0:
        pivot.balance = 1
        node.balance = -1
    else:
        pivot.balance = 0
        node.balance = 0
    return pivot


def rotate_rr(node: Node) -> Node:
    """Mirror image of rotate_ll: hoists the right child."""
    pivot = node.right
    if pivot is None:
        raise StructuralError("RR rotation requires a right child")
    node.right = pivot.left
    pivot.left = node
    if pivot.balance == 0:
        pivot.balance = -1
        node.balance = 1
    else:
        pivot.balance = 0
        node.balance = 0
    return pivot


def rotate_lr(node: Node) -> Node:
    """Double rotation: the left child's right child becomes the subtree root.

    New balances are a fixed table keyed on the grandchild's prior balance;
    the grandchild always ends at 0.
    """
    left = node.left
    if left is None or left.right is None:
        raise StructuralError("LR rotation requires a left child with a right child")
    pivot = left.right
    left.right = pivot.left
    node.left = pivot.right
    pivot.left = left
    pivot.right = node
    if pivot.balance == -1:
        left.balance = 0
        node.balance = 1
    elif pivot.balance == 1:
        left.balance = -1
        node.balance = 0
    else:
        left.balance = 0
        node.balance = 0
    pivot.balance = 0
    return pivot


def rotate_rl(node: Node) -> Node:
    """Mirror image of rotate_lr: the right child's left child is hoisted."""
    right = node.right
    if right is None or right.left is None:
        raise StructuralError("RL rotation requires a right child with a left child")
    pivot = right.left
    right.left = pivot.right
    node.right = pivot.left
    pivot.right = right
    pivot.left = node
    if pivot.balance == 1:
        right.balance = 0
        node.balance = -1
    elif pivot.balance == -1:
        right.balance = 1
        node.balance = 0
    else:
        right.balance = 0
        node.balance = 0
    pivot.balance = 0
    return pivot


def select_replacement(node: Node, strategy: ReplacementStrategy) -> Direction:
    """Pick which subtree supplies the replacement for a two-child deletion.

    The balance-guided strategy takes the taller subtree: left when the
    node's balance is -1, right when it is +1. At balance 0 either subtree
    would do; the left one is used so that runs are reproducible.
    """
    if node.left is None or node.right is None:
        raise StructuralError("replacement selection requires a node with two children")
    if strategy is ReplacementStrategy.RIGHTMOST_OF_LEFT:
        return Direction.LEFT
    if strategy is ReplacementStrategy.LEFTMOST_OF_RIGHT:
        return Direction.RIGHT
    return Direction.RIGHT if node.balance > 0 else Direction.LEFT


_INSERT = Phase.INSERT
_DELETE = Phase.DELETE


def _insert(node, key, value, overwrite, events):
    """Recursive insert. Returns (subtree, grew, inserted, previous_value)."""
    if node is None:
        return Node(key, value), True, True, None
    if key < node.key:
        node.left, grew, inserted, old = _insert(node.left, key, value, overwrite, events)
        if grew:
            node.balance -= 1
            if node.balance == -1:
                return node, True, inserted, old
            if node.balance == -2:
                if node.left.balance > 0:
                    node = rotate_lr(node)
                    events.append(RotationEvent(RotationKind.LR, _INSERT))
                else:
                    node = rotate_ll(node)
                    events.append(RotationEvent(RotationKind.LL, _INSERT))
        return node, False, inserted, old
    if key > node.key:
        node.right, grew, inserted, old = _insert(node.right, key, value, overwrite, events)
        if grew:
            node.balance += 1
            if node.balance == 1:
                return node, True, inserted, old
            if node.balance == 2:
                if node.right.balance < 0:
                    node = rotate_rl(node)
                    events.append(RotationEvent(RotationKind.RL, _INSERT))
                else:
                    node = rotate_rr(node)
                    events.append(RotationEvent(RotationKind.RR, _INSERT))
        return node, False, inserted, old
    old = node.value
    if overwrite:
        node.value = value
    return node, False, False, old


def _rebalance_shrunk(node, events):
    """Rebalance a node whose balance was just pushed by a child-height loss.

    Returns (subtree, shrank): shrank is True when the subtree rooted here
    is now one level shorter than before the deletion, which tells the
    caller to keep retracing toward the root.
    """
    balance = node.balance
    if balance == 0:
        return node, True
    if balance == -1 or balance == 1:
        return node, False
    if balance == 2:
        if node.right.balance < 0:
            node = rotate_rl(node)
            events.append(RotationEvent(RotationKind.RL, _DELETE))
        else:
            node = rotate_rr(node)
            events.append(RotationEvent(RotationKind.RR, _DELETE))
    else:
        if node.left.balance > 0:
            node = rotate_lr(node)
            events.append(RotationEvent(RotationKind.LR, _DELETE))
        else:
            node = rotate_ll(node)
            events.append(RotationEvent(RotationKind.LL, _DELETE))
    return node, node.balance == 0


def _pop_rightmost(node, events):
    """Unlink the rightmost node of a subtree. Returns (subtree, shrank, key, value)."""
    if node.right is None:
        return node.left, True, node.key, node.value
    node.right, shrank, key, value = _pop_rightmost(node.right, events)
    if not shrank:
        return node, False, key, value
    node.balance -= 1
    node, shrank = _rebalance_shrunk(node, events)
    return node, shrank, key, value


def _pop_leftmost(node, events):
    """Mirror of _pop_rightmost."""
    if node.left is None:
        return node.right, True, node.key, node.value
    node.left, shrank, key, value = _pop_leftmost(node.left, events)
    if not shrank:
        return node, False, key, value
    node.balance += 1
    node, shrank = _rebalance_shrunk(node, events)
    return node, shrank, key, value


def _delete(node, key, strategy, events, trace):
    """Recursive delete. Returns (subtree, shrank, found, removed_value)."""
    if node is None:
        return None, False, False, None
    if key < node.key:
        node.left, shrank, found, value = _delete(node.left, key, strategy, events, trace)
        if not shrank:
            return node, False, found, value
        node.balance += 1
        node, shrank = _rebalance_shrunk(node, events)
        return node, shrank, found, value
    if key > node.key:
        node.right, shrank, found, value = _delete(node.right, key, strategy, events, trace)
        if not shrank:
            return node, False, found, value
        node.balance -= 1
        node, shrank = _rebalance_shrunk(node, events)
        return node, shrank, found, value
    value = node.value
    if node.left is None:
        return node.right, True, True, value
    if node.right is None:
        return node.left, True, True, value
    direction = select_replacement(node, strategy)
    if trace is not None:
        trace.two_child = True
        trace.node_balance = node.balance
        trace.direction = direction
    if direction is Direction.LEFT:
        node.left, shrank, node.key, node.value = _pop_rightmost(node.left, events)
        if trace is not None:
            trace.replacement_key = node.key
        if not shrank:
            return node, False, True, value
        node.balance += 1
    else:
        node.right, shrank, node.key, node.value = _pop_leftmost(node.right, events)
        if trace is not None:
            trace.replacement_key = node.key
        if not shrank:
            return node, False, True, value
        node.balance -= 1
    node, shrank = _rebalance_shrunk(node, events)
    return node, shrank, True, value


class AvlTree:
    """Set-semantics AVL tree over totally ordered keys.

    Mutations report the rotations they performed. Single-writer: callers
    must not mutate one instance concurrently; read-only calls may run
    alongside each other as long as no mutation is in flight.
    """

    __slots__ = ("root", "size")

    def __init__(self, keys=()):
        self.root: Optional[Node] = None
        self.size = 0
        for key in keys:
            self.insert(key)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator:
        yield from (node.key for node in self._nodes_in_order())

    def __contains__(self, key) -> bool:
        return self.search(key)

    def insert(self, key) -> tuple[bool, list[RotationEvent]]:
        """Insert a key. Returns (inserted, rotations).

        A duplicate key is rejected: the tree is unchanged, no rotations.
        An insertion performs at most one rotation (single or double).
        """
        events: list[RotationEvent] = []
        self.root, _, inserted, _ = _insert(self.root, key, None, False, events)
        if inserted:
            self.size += 1
        return inserted, events

    def put(self, key, value) -> tuple[Optional[Any], list[RotationEvent]]:
        """Insert or overwrite a key's value. Returns (previous value, rotations).

        Overwriting an existing key changes no structure and emits no events.
        """
        events: list[RotationEvent] = []
        self.root, _, inserted, old = _insert(self.root, key, value, True, events)
        if inserted:
            self.size += 1
            return None, events
        return old, events

    def delete(self, key, strategy=ReplacementStrategy.OPTIMUM,
               trace: Optional[DeletionTrace] = None) -> tuple[bool, list[RotationEvent]]:
        """Delete a key. Returns (deleted, rotations).

        An absent key returns (False, []) and is not an error. Retracing
        runs from the removal point toward the root, so one deletion can
        emit several rotation events.
        """
        found, _, events = self.pop(key, strategy, trace)
        return found, events

    def pop(self, key, strategy=ReplacementStrategy.OPTIMUM,
            trace: Optional[DeletionTrace] = None):
        """Like delete, but also returns the removed node's stored value.

        Returns (found, value, rotations).
        """
        events: list[RotationEvent] = []
        self.root, _, found, value = _delete(self.root, key, strategy, events, trace)
        if found:
            self.size -= 1
        return found, value, events

    def search(self, key) -> bool:
        """Membership test using at most height + 1 key comparisons.

        Descends with a single less-than per level, remembering the last
        node passed on the right, and settles equality once at the bottom.
        """
        node = self.root
        candidate = None
        while node is not None:
            if key < node.key:
                node = node.left
            else:
                candidate = node
                node = node.right
        return candidate is not None and bool(candidate.key == key)

    def get(self, key, default=None):
        node = self.root
        candidate = None
        while node is not None:
            if key < node.key:
                node = node.left
            else:
                candidate = node
                node = node.right
        if candidate is not None and candidate.key == key:
            return candidate.value
        return default

    def in_order(self) -> list:
        """All keys in ascending order."""
        return [node.key for node in self._nodes_in_order()]

    def items_in_order(self) -> list:
        """All (key, value) pairs in ascending key order."""
        return [(node.key, node.value) for node in self._nodes_in_order()]

    def _nodes_in_order(self) -> Iterator[Node]:
        stack: list[Node] = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node
            node = node.right

    def height(self) -> int:
        """Actual tree height, recomputed by traversal (O(n); for checks and demos)."""

        def walk(node):
            if node is None:
                return 0
            return 1 + max(walk(node.left), walk(node.right))

        return walk(self.root)

    def clone(self) -> "AvlTree":
        """Structural deep copy (keys and values are shared, links are not)."""

        def copy(node):
            if node is None:
                return None
            twin = Node(node.key, node.value)
            twin.balance = node.balance
            twin.left = copy(node.left)
            twin.right = copy(node.right)
            return twin

        other = AvlTree()
        other.root = copy(self.root)
        other.size = self.size
        return other

    def validate(self) -> ValidationReport:
        """Check every structural invariant; never mutates.

        Reports violations of: strict BST ordering, the height-difference
        bound, stored balance versus recomputed height difference, and the
        size count.
        """
        report = ValidationReport()
        violations = report.violations

        def walk(node):
            # returns (height, count, min_key, max_key) of the subtree
            if node is None:
                return 0, 0, None, None
            left_h, left_n, left_min, left_max = walk(node.left)
            right_h, right_n, right_min, right_max = walk(node.right)
            if left_max is not None and not left_max < node.key:
                violations.append(Violation(
                    "bst-order", node.key,
                    f"left subtree max {left_max!r} is not below the node key"))
            if right_min is not None and not node.key < right_min:
                violations.append(Violation(
                    "bst-order", node.key,
                    f"right subtree min {right_min!r} is not above the node key"))
            diff = right_h - left_h
            if abs(diff) > 1:
                violations.append(Violation(
                    "avl-height", node.key,
                    f"subtree heights {left_h} and {right_h} differ by more than one"))
            if node.balance != diff:
                violations.append(Violation(
                    "balance-mismatch", node.key,
                    f"stored balance {node.balance}, recomputed {diff}"))
            lo = node.key if left_min is None else min(left_min, node.key)
            hi = node.key if right_max is None else max(right_max, node.key)
            return max(left_h, right_h) + 1, left_n + right_n + 1, lo, hi

        _, count, _, _ = walk(self.root)
        if count != self.size:
            violations.append(Violation(
                "size-mismatch", None,
                f"size says {self.size}, found {count} reachable nodes"))
        return report


def format_tree(tree: AvlTree) -> str:
    """Indented text rendering of a tree with per-node balances."""
    if tree.root is None:
        return "(empty)"
    lines: list[str] = []

    def draw(node, prefix, child_prefix, tag):
        lines.append(f"{prefix}{tag}{node.key} ({node.balance})")
        children = [(node.left, "L: "), (node.right, "R: ")]
        present = [(child, tag) for child, tag in children if child is not None]
        for i, (child, child_tag) in enumerate(present):
            last = i == len(present) - 1
            branch = "`-- " if last else "|-- "
            extension = "    " if last else "|   "
            draw(child, child_prefix + branch, child_prefix + extension, child_tag)

    draw(tree.root, "", "", "")
    return "\n".join(lines)
