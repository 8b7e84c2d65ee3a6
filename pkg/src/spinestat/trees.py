"""Binary trees: representation, canonical enumeration, right-spine statistics,
the level-to-level growth step and its inverse, and a uniform random sampler.

A tree is either a single external node or an internal node with a left and a
right subtree.  "Size" always means the number of internal nodes; a size-n
tree has n+1 external nodes and 2n+1 nodes in total.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import CapExceeded, EmptyTree, MalformedCode

# Exhaustive enumeration above this size (~2.7M trees at 14) is refused
# unless the caller raises the cap explicitly.
DEFAULT_CAP = 14

# Preorder bit encoding of a tree: '1' for internal, '0' for external.
TreeCode = str


@dataclass(frozen=True, slots=True)
class BinaryTree:
    """Either an external node (no children) or an internal node (two children)."""

    left: BinaryTree | None = None
    right: BinaryTree | None = None

    def __post_init__(self) -> None:
        if (self.left is None) != (self.right is None):
            raise ValueError("a node has either zero or two children")

    @property
    def is_external(self) -> bool:
        return self.left is None


EXTERNAL = BinaryTree()


def internal(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return BinaryTree(left, right)


def size(t: BinaryTree) -> int:
    """Number of internal nodes."""
    count = 0
    stack = [t]
    while stack:
        node = stack.pop()
        if not node.is_external:
            count += 1
            stack.append(node.left)
            stack.append(node.right)
    return count


def spine_segments(t: BinaryTree) -> int:
    """Number of edges on the maximal path of right children from the root."""
    count = 0
    while not t.is_external:
        count += 1
        t = t.right
    return count


@lru_cache(maxsize=None)
def _all_trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (EXTERNAL,)
    return tuple(
        BinaryTree(left, right)
        for i in range(n)
        for left in _all_trees(i)
        for right in _all_trees(n - 1 - i)
    )


def enumerate_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[BinaryTree]:
    """Yield every tree of size n exactly once, in canonical order.

    Canonical order: left-subtree size ascending, then recursively the same
    rule on the left and then the right subtree.
    """
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > cap:
        raise CapExceeded(f"size {n} exceeds the exhaustive cap {cap}")
    yield from _all_trees(n)


def successors(t: BinaryTree) -> list[BinaryTree]:
    """All size+1 trees obtained by the growth step.

    For each node on the right spine (depth 0 .. spine_segments(t), the last
    being the terminal external node) the subtree there is replaced by an
    internal node with the old subtree on the left and an external node on
    the right.  The result at spine depth d has d+1 spine segments.
    """
    result = [BinaryTree(t, EXTERNAL)]
    if not t.is_external:
        result.extend(BinaryTree(t.left, s) for s in successors(t.right))
    return result


def predecessor(t: BinaryTree) -> tuple[BinaryTree, int]:
    """Invert the growth step: return (p, d) with successors(p)[d] == t.

    The subtree at the last-but-one node on the right spine is replaced by
    its left subtree.
    """
    if t.is_external:
        raise EmptyTree("the size-0 tree has no predecessor")
    if t.right.is_external:
        return t.left, 0
    p, d = predecessor(t.right)
    return BinaryTree(t.left, p), d + 1


def encode(t: BinaryTree) -> TreeCode:
    """Preorder bit encoding: internal -> '1' + left + right, external -> '0'."""
    bits: list[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if node.is_external:
            bits.append("0")
        else:
            bits.append("1")
            stack.append(node.right)
            stack.append(node.left)
    return "".join(bits)


def decode(code: TreeCode) -> BinaryTree:
    """Inverse of encode; raises MalformedCode on any invalid bit string."""
    if not code or set(code) - {"0", "1"}:
        raise MalformedCode("code must be a nonempty string of '0'/'1'")
    if code.count("0") != code.count("1") + 1:
        raise MalformedCode("code must have exactly one more '0' than '1's")
    stack: list[BinaryTree] = []
    for bit in reversed(code):
        if bit == "0":
            stack.append(EXTERNAL)
        else:
            if len(stack) < 2:
                raise MalformedCode("prefix condition violated")
            left = stack.pop()
            right = stack.pop()
            stack.append(BinaryTree(left, right))
    if len(stack) != 1:
        raise MalformedCode("prefix condition violated")
    return stack[0]


def _grow_random(n: int, rng: random.Random) -> tuple[list[int], list[int], int]:
    """Leaf-insertion growth (Remy-style) in array form.

    Returns (left, right, root) child-index arrays; -1 marks an external
    node.  Each step picks a uniform node of the current tree and a side,
    and grafts a new internal node with a fresh leaf there; after n steps
    the result is uniform over all trees of size n.
    """
    left = [-1]
    right = [-1]
    parent = [-1]
    root = 0
    for k in range(n):
        v = rng.randrange(2 * k + 1)
        side = rng.randrange(2)
        a = len(left)      # new internal node
        b = a + 1          # new external node
        p = parent[v]
        if side:
            left.append(v)
            right.append(b)
        else:
            left.append(b)
            right.append(v)
        parent.append(p)
        left.append(-1)
        right.append(-1)
        parent.append(a)
        parent[v] = a
        if p < 0:
            root = a
        elif left[p] == v:
            left[p] = a
        else:
            right[p] = a
    return left, right, root


def _tree_from_arrays(left: list[int], right: list[int], root: int) -> BinaryTree:
    built: dict[int, BinaryTree] = {}
    stack = [(root, False)]
    while stack:
        v, ready = stack.pop()
        if left[v] < 0:
            built[v] = EXTERNAL
        elif ready:
            built[v] = BinaryTree(built[left[v]], built[right[v]])
        else:
            stack.append((v, True))
            stack.append((left[v], False))
            stack.append((right[v], False))
    return built[root]


def _spine_from_arrays(left: list[int], right: list[int], root: int) -> int:
    count = 0
    v = root
    while left[v] >= 0:
        count += 1
        v = right[v]
    return count


def sample_uniform(n: int, seed: int) -> BinaryTree:
    """A uniformly random tree of size n; deterministic for a fixed seed."""
    rng = random.Random(seed)
    return _tree_from_arrays(*_grow_random(n, rng))


def sample_spines(n: int, samples: int, seed: int) -> Iterator[int]:
    """Spine segment counts of `samples` uniform size-n trees from one seeded
    generator.  Skips building tree objects, so large runs stay cheap."""
    rng = random.Random(seed)
    for _ in range(samples):
        yield _spine_from_arrays(*_grow_random(n, rng))
