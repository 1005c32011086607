"""Finite biquandles and quandles presented by operation tables.

Elements are 1-based integers 1..n.  A biquandle carries two binary
operations, written here as under(x, y) for the strand passing under y
and over(x, y) for the strand passing over y.  Quandles are the special
case over(x, y) = x.

Tables are row-major: under_table[x-1][y-1] = under(x, y).
"""


def check_axioms(under, over):
    """Return a list of human-readable axiom violations (empty if valid)."""
    problems = []
    n = len(under)
    for name, table in (("under", under), ("over", over)):
        if len(table) != n:
            problems.append("%s table has %d rows, expected %d" % (name, len(table), n))
            return problems
        for i, row in enumerate(table):
            if len(row) != n:
                problems.append("%s table row %d has length %d" % (name, i + 1, len(row)))
                return problems
            for v in row:
                if not (isinstance(v, int) and 1 <= v <= n):
                    problems.append("%s table entry %r out of range 1..%d" % (name, v, n))
                    return problems

    def u(x, y):
        return under[x - 1][y - 1]

    def o(x, y):
        return over[x - 1][y - 1]

    for x in range(1, n + 1):
        if u(x, x) != o(x, x):
            problems.append(
                "diagonal mismatch at x=%d: under(x,x)=%d, over(x,x)=%d"
                % (x, u(x, x), o(x, x))
            )
    for y in range(1, n + 1):
        if len({u(x, y) for x in range(1, n + 1)}) != n:
            problems.append("under(-, %d) is not a bijection" % y)
        if len({o(x, y) for x in range(1, n + 1)}) != n:
            problems.append("over(-, %d) is not a bijection" % y)
    pair_map = {(u(a, b), o(b, a)) for a in range(1, n + 1) for b in range(1, n + 1)}
    if len(pair_map) != n * n:
        problems.append("crossing map (a,b) -> (under(a,b), over(b,a)) is not a bijection")
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                if u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)):
                    problems.append("exchange law 1 fails at (%d,%d,%d)" % (x, y, z))
                if o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)):
                    problems.append("exchange law 2 fails at (%d,%d,%d)" % (x, y, z))
                if o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)):
                    problems.append("exchange law 3 fails at (%d,%d,%d)" % (x, y, z))
    return problems


class Biquandle:
    """A finite biquandle; validates its axioms on construction."""

    def __init__(self, under, over, name=None, check=True):
        self.under_table = [list(row) for row in under]
        self.over_table = [list(row) for row in over]
        self.name = name
        if check:
            problems = check_axioms(self.under_table, self.over_table)
            if problems:
                extra = "" if len(problems) == 1 else " (and %d more)" % (len(problems) - 1)
                raise ValueError("not a biquandle: %s%s" % (problems[0], extra))
        n = len(self.under_table)
        self._under_inv = [[0] * n for _ in range(n)]
        self._over_inv = [[0] * n for _ in range(n)]
        for y in range(1, n + 1):
            for x in range(1, n + 1):
                self._under_inv[self.under_table[x - 1][y - 1] - 1][y - 1] = x
                self._over_inv[self.over_table[x - 1][y - 1] - 1][y - 1] = x
        self._through_inv = {}
        for a in range(1, n + 1):
            for b in range(1, n + 1):
                self._through_inv[self.through(a, b)] = (a, b)

    @property
    def n(self):
        return len(self.under_table)

    @property
    def elements(self):
        return range(1, self.n + 1)

    def under(self, x, y):
        return self.under_table[x - 1][y - 1]

    def over(self, x, y):
        return self.over_table[x - 1][y - 1]

    def under_inv(self, x, y):
        """The z with under(z, y) = x."""
        return self._under_inv[x - 1][y - 1]

    def over_inv(self, x, y):
        """The z with over(z, y) = x."""
        return self._over_inv[x - 1][y - 1]

    def through(self, a, b):
        """Input pair (under, over) to output pair at a positive crossing."""
        return (self.under(a, b), self.over(b, a))

    def through_inv(self, c, d):
        """Output pair (under, over) back to the input pair."""
        return self._through_inv[(c, d)]

    @property
    def is_quandle(self):
        return all(
            self.over_table[x][y] == x + 1 for x in range(self.n) for y in range(self.n)
        )

    def __eq__(self, other):
        if not isinstance(other, Biquandle):
            return NotImplemented
        return (
            self.under_table == other.under_table and self.over_table == other.over_table
        )

    def __repr__(self):
        label = self.name or "order %d" % self.n
        kind = "quandle" if self.is_quandle else "biquandle"
        return "<%s %s>" % (kind, label)


def quandle(under, name=None):
    n = len(under)
    over = [[x + 1] * n for x in range(n)]
    return Biquandle(under, over, name=name)


def _mod_rep(v, m):
    # 1..m representatives with m standing for the zero class
    return ((v - 1) % m) + 1


def trivial_quandle(n):
    return quandle([[x + 1] * n for x in range(n)], name="trivial-%d" % n)


def core_cyclic(m):
    """Core quandle of the cyclic group: x . y = 2y - x mod m."""
    under = [
        [_mod_rep(2 * y - x, m) for y in range(1, m + 1)] for x in range(1, m + 1)
    ]
    return quandle(under, name="core-%d" % m)


def alexander_cyclic(m, t):
    """Alexander quandle on Z_m: x . y = t*x + (1-t)*y, gcd(t, m) = 1."""
    import math

    if math.gcd(t % m, m) != 1:
        raise ValueError("t must be a unit mod m")
    under = [
        [_mod_rep(t * x + (1 - t) * y, m) for y in range(1, m + 1)]
        for x in range(1, m + 1)
    ]
    return quandle(under, name="alexander-%d-%d" % (m, t))


def constant_action_biquandle_z2():
    """Order-2 biquandle where both operations flip the element."""
    flip = [[2, 2], [1, 1]]
    return Biquandle(flip, flip, name="flip2")


def swap3():
    """Order-3 quandle where 3 swaps 1 and 2 and everything else is inert."""
    return quandle([[1, 1, 2], [2, 2, 1], [3, 3, 3]], name="swap3")


def conjugation_quandle(mult, name=None):
    """Conjugation quandle x . y = y^-1 x y of a group given by its table."""
    n = len(mult)
    inv = [0] * n
    for x in range(n):
        for y in range(n):
            if mult[x][y] == 1:
                inv[x] = y + 1
    def times(a, b):
        return mult[a - 1][b - 1]
    under = [
        [times(times(inv[y - 1], x), y) for y in range(1, n + 1)]
        for x in range(1, n + 1)
    ]
    return quandle(under, name=name or "conj-%d" % n)


def builtin(name):
    """Look up a built-in algebra: trivial-N, core-M, alexander-M-T, swap3, flip2."""
    if name == "swap3":
        return swap3()
    if name == "flip2":
        return constant_action_biquandle_z2()
    parts = name.split("-")
    try:
        if parts[0] == "trivial" and len(parts) == 2:
            return trivial_quandle(int(parts[1]))
        if parts[0] == "core" and len(parts) == 2:
            return core_cyclic(int(parts[1]))
        if parts[0] == "alexander" and len(parts) == 3:
            return alexander_cyclic(int(parts[1]), int(parts[2]))
    except ValueError as exc:
        raise KeyError("bad algebra name %r: %s" % (name, exc))
    raise KeyError("unknown algebra %r" % name)


def homomorphisms(src, dst):
    """All maps f with f(under(x,y)) = under(f x, f y) and same for over.

    Returned as sorted tuples of 1-based images.
    """
    n = src.n
    out = []

    def propagate(images):
        # images: dict elem -> image; extend by forced values, or None on clash
        images = dict(images)
        changed = True
        while changed:
            changed = False
            known = list(images.items())
            for x, fx in known:
                for y, fy in known:
                    for op_s, op_d in (
                        (src.under, dst.under),
                        (src.over, dst.over),
                    ):
                        t = op_s(x, y)
                        want = op_d(fx, fy)
                        have = images.get(t)
                        if have is None:
                            images[t] = want
                            changed = True
                        elif have != want:
                            return None
        return images

    def search(images):
        images = propagate(images)
        if images is None:
            return
        if len(images) == n:
            out.append(tuple(images[x] for x in range(1, n + 1)))
            return
        x = next(e for e in range(1, n + 1) if e not in images)
        for v in dst.elements:
            step = dict(images)
            step[x] = v
            search(step)

    search({})
    return sorted(set(out))


def endomorphisms(bq):
    return homomorphisms(bq, bq)


def is_homomorphism(src, dst, images):
    if len(images) != src.n:
        return False
    f = lambda x: images[x - 1]
    return all(
        f(src.under(x, y)) == dst.under(f(x), f(y))
        and f(src.over(x, y)) == dst.over(f(x), f(y))
        for x in src.elements
        for y in src.elements
    )


def compose(f, g):
    """(f after g) as image tuples."""
    return tuple(f[g[x - 1] - 1] for x in range(1, len(g) + 1))
