"""Polynomials attached to quiver representations.

Two flavours of variable coexist:

* ordinary counting variables s, t, z whose exponents are plain
  integers, and
* group-exponent variables x, y, q whose exponents live in the
  coefficient group of the cocycles (integers mod m, or all of Z when
  m = 0), so exponents add modulo m under multiplication.

Terms render without spaces, highest term first under the precedence
x > y > s > t > z; q-terms render in ascending order instead so small
weights read first.
"""

VAR_PRECEDENCE = ("x", "y", "s", "t", "z", "q")
GROUP_VARS = frozenset(("x", "y", "q"))


class LimitError(RuntimeError):
    """Raised when a configured size cap is exceeded."""


def _norm_exp(var, exp, modulus):
    if var in GROUP_VARS and modulus:
        return exp % modulus
    return exp


class GroupExponentPolynomial:
    """Integer-coefficient polynomial with group-valued exponents on x, y, q."""

    __slots__ = ("terms", "modulus")

    def __init__(self, terms=None, modulus=0):
        # terms: {(("x", 2), ("z", 3)): coeff, ...} keys sorted by precedence
        self.terms = dict(terms) if terms else {}
        self.modulus = modulus

    @classmethod
    def zero(cls, modulus=0):
        return cls({}, modulus)

    @classmethod
    def constant(cls, c, modulus=0):
        return cls({(): c} if c else {}, modulus)

    @classmethod
    def monomial(cls, coeff, exps, modulus=0):
        """exps: dict var -> exponent."""
        if not coeff:
            return cls({}, modulus)
        key = _make_key(exps, modulus)
        return cls({key: coeff}, modulus)

    def _join_modulus(self, other):
        a, b = self.modulus, other.modulus
        if a and b and a != b:
            raise ValueError("mixed exponent moduli %d and %d" % (a, b))
        return a or b

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupExponentPolynomial.constant(other, self.modulus)
        m = self._join_modulus(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            c2 = out.get(key, 0) + c
            if c2:
                out[key] = c2
            else:
                out.pop(key, None)
        return GroupExponentPolynomial(out, m)

    def __neg__(self):
        return GroupExponentPolynomial({k: -c for k, c in self.terms.items()}, self.modulus)

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupExponentPolynomial.constant(other, self.modulus)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return GroupExponentPolynomial.zero(self.modulus)
            return GroupExponentPolynomial(
                {k: c * other for k, c in self.terms.items()}, self.modulus
            )
        m = self._join_modulus(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                key = _merge_keys(k1, k2, m)
                c = out.get(key, 0) + c1 * c2
                if c:
                    out[key] = c
                else:
                    out.pop(key, None)
        return GroupExponentPolynomial(out, m)

    __rmul__ = __mul__
    __radd__ = __add__

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupExponentPolynomial.constant(other, self.modulus)
        if not isinstance(other, GroupExponentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def mass(self):
        """Sum of all coefficients, i.e. the value at every variable = 1."""
        return sum(self.terms.values())

    def variables(self):
        return {v for key in self.terms for v, _ in key}

    def render(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=_render_order)
        parts = []
        for key in keys:
            c = self.terms[key]
            body = "".join(
                v if e == 1 else "%s^%d" % (v, e)
                for v, e in sorted(key, key=lambda p: VAR_PRECEDENCE.index(p[0]))
            )
            mag = abs(c)
            coef = "" if (mag == 1 and body) else str(mag)
            piece = coef + body
            if not parts:
                parts.append(("-" if c < 0 else "") + piece)
            else:
                parts.append(("-" if c < 0 else "+") + piece)
        return "".join(parts)

    __repr__ = render
    __str__ = render


def _make_key(exps, modulus):
    items = []
    for v, e in exps.items():
        if v not in VAR_PRECEDENCE:
            raise ValueError("unknown variable %r" % v)
        e = _norm_exp(v, e, modulus)
        if e:
            items.append((v, e))
    items.sort(key=lambda p: VAR_PRECEDENCE.index(p[0]))
    return tuple(items)


def _merge_keys(k1, k2, modulus):
    exps = dict(k1)
    for v, e in k2:
        exps[v] = exps.get(v, 0) + e
    return _make_key(exps, modulus)


def _render_order(key):
    exps = dict(key)
    return (
        tuple(-exps.get(v, 0) for v in ("x", "y", "s", "t", "z")),
        exps.get("q", 0),
    )


def char_poly(mat, var="t"):
    """det(var*I - mat) for a square integer matrix, exactly.

    Uses trace recursion with exact integer division; non-integer
    intermediate divisions would signal a non-integer matrix and raise.
    """
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise ValueError("matrix must be square")
    coeffs = [1]  # c_0 = 1 for lambda^n
    work = [row[:] for row in mat]
    for k in range(1, n + 1):
        if k > 1:
            shifted = [row[:] for row in work]
            for i in range(n):
                shifted[i][i] += coeffs[-1]
            work = [
                [sum(mat[i][l] * shifted[l][j] for l in range(n)) for j in range(n)]
                for i in range(n)
            ]
        tr = sum(work[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        assert r == 0, "trace recursion left a nonzero remainder"
        coeffs.append(q)
    out = GroupExponentPolynomial.zero()
    for k, c in enumerate(coeffs):
        out = out + GroupExponentPolynomial.monomial(c, {var: n - k})
    return out


def matrix_poly(mat, row_labels, col_labels, modulus, row_var="x", col_var="y"):
    """Sum of entries as coeff * row_var^row_label * col_var^col_label."""
    out = GroupExponentPolynomial.zero(modulus)
    for j, row in enumerate(mat):
        for k, c in enumerate(row):
            if c:
                out = out + GroupExponentPolynomial.monomial(
                    c, {row_var: row_labels[j], col_var: col_labels[k]}, modulus
                )
    return out


def specialize(poly, ones=(), merge_xy_to_q=False):
    """Set each variable in `ones` to 1 and optionally merge x, y into q.

    Merging requires every term to carry equal x and y exponents; the
    common exponent becomes the q exponent.
    """
    drop = set(ones)
    out = {}
    for key, c in poly.terms.items():
        exps = {v: e for v, e in key if v not in drop}
        if merge_xy_to_q:
            ex = exps.pop("x", 0)
            ey = exps.pop("y", 0)
            if ex != ey:
                raise ValueError("cannot merge x^%d with y^%d into q" % (ex, ey))
            if ex:
                exps["q"] = exps.get("q", 0) + ex
        newkey = _make_key(exps, poly.modulus)
        c2 = out.get(newkey, 0) + c
        if c2:
            out[newkey] = c2
        else:
            out.pop(newkey, None)
    return GroupExponentPolynomial(out, poly.modulus)


def render_root_form(pairs):
    """Render a multiset of weight values as a product over roots.

    pairs: iterable of (weight, multiplicity); weight 0 renders as q,
    weight k as (q-k).
    """
    parts = []
    for w, mult in sorted(pairs):
        if mult <= 0:
            continue
        base = "q" if w == 0 else "(q-%d)" % w
        parts.append(base if mult == 1 else "%s^%d" % (base, mult))
    return "".join(parts) if parts else "1"


def maximal_paths(quiver, max_edges=64, max_paths=200000):
    """All maximal non-repeating edge paths of a quiver.

    A path is a sequence of edges, each starting where the previous one
    ended and no edge used twice.  A path is maximal when it is not a
    subsequence (order preserving, not necessarily contiguous) of any
    other such path.  Caps guard against blowup and raise LimitError.
    """
    edges = list(range(len(quiver.edges)))
    if len(edges) > max_edges:
        raise LimitError("edge count %d exceeds cap %d" % (len(edges), max_edges))
    by_source = {}
    for idx in edges:
        by_source.setdefault(quiver.edges[idx][0], []).append(idx)

    # candidates: paths with no unused out-edge at the head and no unused
    # in-edge at the tail
    candidates = []
    seen = set()

    def extensions(path, used):
        head = quiver.edges[path[-1]][1]
        return [e for e in by_source.get(head, ()) if e not in used]

    def back_extensions(path, used):
        tail = quiver.edges[path[0]][0]
        return [
            e for e in edges if e not in used and quiver.edges[e][1] == tail
        ]

    stack = [((e,), frozenset((e,))) for e in edges]
    while stack:
        path, used = stack.pop()
        exts = extensions(path, used)
        if exts:
            for e in exts:
                stack.append((path + (e,), used | {e}))
            continue
        if back_extensions(path, used):
            continue
        if path not in seen:
            seen.add(path)
            candidates.append(path)
        if len(candidates) > max_paths:
            raise LimitError("maximal path count exceeds cap %d" % max_paths)

    def is_subseq(short, long_):
        if len(short) >= len(long_):
            return False
        it = iter(long_)
        return all(e in it for e in short)

    out = []
    for p in candidates:
        if not any(is_subseq(p, q) for q in candidates if q is not p):
            out.append(p)
    out.sort()
    return out


def edge_char_polynomial(quiver, var="t"):
    """Sum over edges of det(t*I - action matrix)."""
    out = GroupExponentPolynomial.zero()
    for _, _, mat in quiver.edges:
        out = out + char_poly(mat, var)
    return out


def edge_matrix_polynomial(quiver):
    """Sum over edges of the entry polynomial, x on rows and y on columns."""
    m = quiver.modulus
    labels = quiver.labels
    out = GroupExponentPolynomial.zero(m)
    for _, _, mat in quiver.edges:
        out = out + matrix_poly(mat, labels, labels, m, row_var="x", col_var="y")
    return out


def _path_matrix(quiver, path):
    mat = None
    for e in path:
        step = quiver.edges[e][2]
        mat = step if mat is None else _mat_mul(step, mat)
    return mat


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def path_char_polynomial(quiver, var="t", path_var="s", **caps):
    """Sum over maximal paths of det(t*I - product matrix) * s^length."""
    out = GroupExponentPolynomial.zero()
    for path in maximal_paths(quiver, **caps):
        mat = _path_matrix(quiver, path)
        out = out + char_poly(mat, var) * GroupExponentPolynomial.monomial(
            1, {path_var: len(path)}
        )
    return out


def path_matrix_polynomial(quiver, path_var="z", **caps):
    """Sum over maximal paths of the entry polynomial times z^length.

    For a path product matrix, x tracks the column label (where the
    path starts) and y the row label (where it ends).
    """
    m = quiver.modulus
    labels = quiver.labels
    out = GroupExponentPolynomial.zero(m)
    for path in maximal_paths(quiver, **caps):
        mat = _path_matrix(quiver, path)
        out = out + matrix_poly(
            mat, labels, labels, m, row_var="y", col_var="x"
        ) * GroupExponentPolynomial.monomial(1, {path_var: len(path)})
    return out
