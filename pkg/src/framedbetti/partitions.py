"""Integer partitions stored by part multiplicities."""

# Weight/length stay far inside machine range at desk scale; anything past
# this bound is rejected rather than silently accepted.
MAX_WEIGHT = 64


def _check_weight_bound(n):
    if n < 0:
        raise ValueError(f"weight must be non-negative, got {n}")
    if n > MAX_WEIGHT:
        raise ValueError(f"weight {n} exceeds the supported bound {MAX_WEIGHT}")


class Partition:
    """An integer partition in multiplicity form.

    ``mult[i]`` counts the parts of size ``i + 1``: the partition 3+1+1
    is stored as ``(2, 0, 1)``.  Canonical form carries no trailing
    zeros, so the empty tuple is the empty partition.
    """

    __slots__ = ("_mult",)

    def __init__(self, mult=()):
        mult = list(mult)
        for m in mult:
            if not isinstance(m, int) or m < 0:
                raise ValueError(f"multiplicities must be non-negative integers, got {m!r}")
        while mult and mult[-1] == 0:
            mult.pop()
        self._mult = tuple(mult)

    @classmethod
    def from_parts(cls, parts):
        """Build a partition from an iterable of positive part sizes (any order)."""
        parts = list(parts)
        for p in parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {p!r}")
        mult = [0] * (max(parts) if parts else 0)
        for p in parts:
            mult[p - 1] += 1
        return cls(mult)

    @classmethod
    def parse(cls, text):
        """Parse ``"[3,1,1]"`` (part list) or ``"1^2 3^1"`` (size^mult tokens).

        The empty string, ``"[]"``, and whitespace all mean the empty
        partition.  Exponent tokens may repeat a size; multiplicities add.
        """
        s = text.strip()
        if s in ("", "[]"):
            return cls()
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"unterminated part list {text!r}")
            body = s[1:-1].strip()
            if not body:
                return cls()
            try:
                parts = [int(tok) for tok in body.split(",")]
            except ValueError:
                raise ValueError(f"cannot parse part list {text!r}") from None
            return cls.from_parts(parts)
        parts = []
        for tok in s.split():
            size, sep, count = tok.partition("^")
            try:
                size = int(size)
                count = int(count) if sep else 1
            except ValueError:
                raise ValueError(f"cannot parse partition token {tok!r}") from None
            if size < 1 or count < 0:
                raise ValueError(f"invalid partition token {tok!r}")
            parts.extend([size] * count)
        return cls.from_parts(parts)

    @property
    def mult(self):
        """Canonical multiplicity tuple (no trailing zeros)."""
        return self._mult

    def count(self, size):
        """Number of parts equal to ``size``."""
        if size < 1:
            raise ValueError(f"part size must be positive, got {size}")
        if size > len(self._mult):
            return 0
        return self._mult[size - 1]

    def items(self):
        """Yield ``(size, multiplicity)`` for the sizes present, ascending."""
        for i, m in enumerate(self._mult, start=1):
            if m:
                yield i, m

    def weight(self):
        """Sum of all parts."""
        return sum(i * m for i, m in self.items())

    def length(self):
        """Number of parts."""
        return sum(self._mult)

    def max_part(self):
        """Largest part, 0 for the empty partition."""
        return len(self._mult)

    def parts(self):
        """Part list in non-increasing order, e.g. ``[3, 1, 1]``."""
        out = []
        for size in range(len(self._mult), 0, -1):
            out.extend([size] * self._mult[size - 1])
        return out

    def to_exponent_string(self):
        """Render as ``"1^2 3^1"``; the empty partition renders as ``""``."""
        return " ".join(f"{i}^{m}" for i, m in self.items())

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts()) + "]"

    def __repr__(self):
        return f"Partition.from_parts({self.parts()!r})"

    def __bool__(self):
        return bool(self._mult)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._mult == other._mult

    def __hash__(self):
        return hash(self._mult)


EMPTY = Partition()


def _descending_part_lists(n, cap):
    # Non-increasing part lists of n with parts <= cap, in decreasing
    # lexicographic order ([4] before [3,1] before [2,2] ...).
    if n == 0:
        yield []
        return
    for first in range(min(n, cap), 0, -1):
        for rest in _descending_part_lists(n - first, first):
            yield [first] + rest


def enumerate_partitions(n):
    """All partitions of ``n``, in decreasing lexicographic part-list order.

    The order is fixed so that downstream tables are reproducible:
    for n=4 it is [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
    """
    _check_weight_bound(n)
    return [Partition.from_parts(parts) for parts in _descending_part_lists(n, n)]


def enumerate_pairs(n):
    """All ordered pairs (alpha, beta) with weight(alpha) + weight(beta) = n.

    Deterministic order: weight(alpha) descending from n to 0, and within
    a fixed split each factor in enumerate_partitions order.
    """
    _check_weight_bound(n)
    out = []
    for k in range(n, -1, -1):
        alphas = enumerate_partitions(k)
        betas = enumerate_partitions(n - k)
        for a in alphas:
            for b in betas:
                out.append((a, b))
    return out
