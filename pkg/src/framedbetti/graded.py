"""Exact arithmetic on graded dimension vectors (Poincare polynomials)."""


class GradedDims:
    """Finitely supported map from homological degree to dimension.

    Stored sparsely with no explicit zeros; dimensions are plain Python
    integers, so all arithmetic is exact at any size.  Values are
    immutable: every operation returns a new vector.
    """

    __slots__ = ("_dims",)

    def __init__(self, dims=()):
        cleaned = {}
        items = dims.items() if hasattr(dims, "items") else dims
        for deg, dim in items:
            if not isinstance(deg, int) or deg < 0:
                raise ValueError(f"degrees must be non-negative integers, got {deg!r}")
            if not isinstance(dim, int) or dim < 0:
                raise ValueError(f"dimensions must be non-negative integers, got {dim!r}")
            if dim:
                cleaned[deg] = cleaned.get(deg, 0) + dim
        self._dims = dict(sorted(cleaned.items()))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def unit(cls):
        """One dimension in degree 0: the identity for tensor."""
        return cls({0: 1})

    @classmethod
    def from_dense(cls, dims):
        """Build from a dense list, index = degree: [1, 2, 1] is 1 + 2t + t^2."""
        return cls(enumerate(dims))

    def __getitem__(self, degree):
        return self._dims.get(degree, 0)

    def support(self):
        """Sorted list of degrees with nonzero dimension."""
        return list(self._dims)

    def as_dict(self):
        """Plain dict copy, degrees ascending."""
        return dict(self._dims)

    def direct_sum(self, other):
        """Pointwise sum of dimensions."""
        merged = dict(self._dims)
        for deg, dim in other._dims.items():
            merged[deg] = merged.get(deg, 0) + dim
        return GradedDims(merged)

    def tensor(self, other):
        """Cauchy product: result[k] = sum_j self[j] * other[k-j]."""
        out = {}
        for da, va in self._dims.items():
            for db, vb in other._dims.items():
                deg = da + db
                out[deg] = out.get(deg, 0) + va * vb
        return GradedDims(out)

    def shift(self, codim):
        """Shift up by twice the given complex codimension.

        Homological degree moves by 2*codim, never by an odd amount, so
        the argument is the codimension rather than the raw degree shift.
        """
        if codim < 0:
            raise ValueError(f"codimension must be non-negative, got {codim}")
        return GradedDims({deg + 2 * codim: dim for deg, dim in self._dims.items()})

    def euler_char(self):
        """Alternating sum of dimensions, sum (-1)^k dims[k]."""
        return sum(dim if deg % 2 == 0 else -dim for deg, dim in self._dims.items())

    def total_rank(self):
        return sum(self._dims.values())

    def top_degree(self):
        """Largest degree with nonzero dimension."""
        if not self._dims:
            raise ValueError("the zero vector has no top degree")
        return max(self._dims)

    def poly_string(self):
        """Render as a polynomial in t, e.g. "1 + 2t + 2t^2 + 2t^3 + t^4"."""
        if not self._dims:
            return "0"
        terms = []
        for deg, dim in self._dims.items():
            if deg == 0:
                terms.append(str(dim))
            else:
                t = "t" if deg == 1 else f"t^{deg}"
                terms.append(t if dim == 1 else f"{dim}{t}")
        return " + ".join(terms)

    __add__ = direct_sum
    __mul__ = tensor

    def __bool__(self):
        return bool(self._dims)

    def __eq__(self, other):
        if not isinstance(other, GradedDims):
            return NotImplemented
        return self._dims == other._dims

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __repr__(self):
        return f"GradedDims({self._dims!r})"
