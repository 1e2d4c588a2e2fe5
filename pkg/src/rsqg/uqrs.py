"""Representations of the two-parameter quantum group U_{r,s}(sl_n).

The algebra has generators e_i, f_i and invertible group-likes w_i, w_i'
for 1 <= i < n.  A Representation stores one sparse matrix per generator
(inverses included, so no inversion happens downstream) together with the
scalar field.  The defining relations R1-R7 can be checked on any
representation, with machine-readable witnesses for every failure.

Tensor powers carry the coproduct action
    e_i |-> sum_j w_i^(j-1 factors) x e_i x 1...,
    f_i |-> sum_j 1... x f_i x w_i'^(k-j factors),
and w_i, w_i' act as k-fold Kronecker powers (they are group-like).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Subspace, kernel_image_rank


class InvalidRank(ValueError):
    """Rank parameter n is out of range."""


class InvalidPower(ValueError):
    """Tensor power k is out of range."""


class NonDiagonalAction(ValueError):
    """A group-like generator does not act diagonally on the given basis."""


@dataclass
class CheckItem:
    """Outcome of a single verified identity."""

    name: str
    indices: tuple
    ok: bool
    witness: dict | None = None


class CheckReport:
    """A list of CheckItem results with an aggregate verdict."""

    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def to_json(self, field):
        out = []
        for c in self.checks:
            row = {"relation": c.name, "indices": list(c.indices), "ok": c.ok}
            if c.witness is not None:
                row["witness_basis_index"] = c.witness["witness_basis_index"]
                row["lhs"] = {str(i): field.format(v)
                              for i, v in sorted(c.witness["lhs"].items())}
                row["rhs"] = {str(i): field.format(v)
                              for i, v in sorted(c.witness["rhs"].items())}
            out.append(row)
        return out

    def __repr__(self):
        bad = len(self.failures())
        return f"CheckReport({len(self.checks)} checks, {bad} failures)"


def _compare(name, indices, lhs, rhs):
    if lhs == rhs:
        return CheckItem(name, indices, True)
    witness = None
    for j in range(1, lhs.cols + 1):
        cl, cr = lhs.col(j), rhs.col(j)
        if cl != cr:
            witness = {"witness_basis_index": j, "lhs": cl, "rhs": cr}
            break
    return CheckItem(name, indices, False, witness)


_GEN_FAMILIES = ("e", "f", "w", "wp", "w_inv", "wp_inv")


def _gen_name(family, i):
    if family.endswith("_inv"):
        return f"{family[:-4]}{i}_inv"
    return f"{family}{i}"


def _parse_gen(name):
    """Split a generator key into (family, index, inverted)."""
    inv = name.endswith("_inv")
    if inv:
        name = name[:-4]
    fam = "wp" if name.startswith("wp") else name[0]
    return fam, int(name[len(fam):]), inv


class Representation:
    """A module over U_{r,s}(sl_n): one matrix per generator, plus the field."""

    __slots__ = ("n", "dim", "gens", "field")

    def __init__(self, n, dim, gens, field):
        self.n = n
        self.dim = dim
        self.gens = gens
        self.field = field
        for name, mat in gens.items():
            if mat.rows != dim or mat.cols != dim:
                raise ValueError(f"generator {name} has wrong shape")

    def generator_names(self):
        return [_gen_name(fam, i)
                for fam in _GEN_FAMILIES for i in range(1, self.n)]

    def gen(self, name):
        return self.gens[name]

    def e(self, i):
        return self.gens[f"e{i}"]

    def f(self, i):
        return self.gens[f"f{i}"]

    def w(self, i):
        return self.gens[f"w{i}"]

    def wp(self, i):
        return self.gens[f"wp{i}"]

    def w_inv(self, i):
        return self.gens[f"w{i}_inv"]

    def wp_inv(self, i):
        return self.gens[f"wp{i}_inv"]

    def to_json(self):
        return {
            "n": self.n,
            "dim": self.dim,
            "generators": {name: self.gens[name].to_json(self.field)
                           for name in self.generator_names()},
        }

    def __repr__(self):
        return f"Representation(n={self.n}, dim={self.dim})"


def natural_rep(n, field):
    """The natural n-dimensional module V: e_i, f_i are matrix units and
    w_i = diag(..., r, s, ...), w_i' = diag(..., s, r, ...) at slots i, i+1."""
    if n < 2:
        raise InvalidRank("rank parameter n must be at least 2")
    one, r, s = field.one, field.r, field.s
    rinv, sinv = r**-1, s**-1
    gens = {}
    for i in range(1, n):
        gens[f"e{i}"] = Matrix(n, n, {(i, i + 1): one}, _clean=True)
        gens[f"f{i}"] = Matrix(n, n, {(i + 1, i): one}, _clean=True)
        dw = [one] * n
        dw[i - 1], dw[i] = r, s
        dwp = [one] * n
        dwp[i - 1], dwp[i] = s, r
        dwi = [one] * n
        dwi[i - 1], dwi[i] = rinv, sinv
        dwpi = [one] * n
        dwpi[i - 1], dwpi[i] = sinv, rinv
        gens[f"w{i}"] = Matrix.diagonal(dw)
        gens[f"wp{i}"] = Matrix.diagonal(dwp)
        gens[f"w{i}_inv"] = Matrix.diagonal(dwi)
        gens[f"wp{i}_inv"] = Matrix.diagonal(dwpi)
    return Representation(n, n, gens, field)


def tensor_power_rep(base, k):
    """k-th tensor power of a representation under the coproduct action."""
    if k < 1:
        raise InvalidPower("tensor power k must be at least 1")
    fld = base.field
    n, d = base.n, base.dim
    ids = [Matrix.identity(d**m, fld.one) for m in range(k)]
    gens = {}
    for i in range(1, n):
        E, F = base.e(i), base.f(i)
        W, Wp = base.w(i), base.wp(i)
        Winv, Wpinv = base.w_inv(i), base.wp_inv(i)
        wpow = [ids[0]]
        wppow = [ids[0]]
        winvp = [ids[0]]
        wpinvp = [ids[0]]
        for _ in range(k - 1):
            wpow.append(wpow[-1].kron(W))
            wppow.append(wppow[-1].kron(Wp))
        for _ in range(k):
            winvp.append(winvp[-1].kron(Winv))
            wpinvp.append(wpinvp[-1].kron(Wpinv))
        emat = Matrix.zero(d**k, d**k)
        fmat = Matrix.zero(d**k, d**k)
        for j in range(1, k + 1):
            emat = emat + wpow[j - 1].kron(E).kron(ids[k - j])
            fmat = fmat + ids[j - 1].kron(F).kron(wppow[k - j])
        gens[f"e{i}"] = emat
        gens[f"f{i}"] = fmat
        gens[f"w{i}"] = wpow[-1].kron(W)
        gens[f"wp{i}"] = wppow[-1].kron(Wp)
        gens[f"w{i}_inv"] = winvp[k]
        gens[f"wp{i}_inv"] = wpinvp[k]
    return Representation(n, d**k, gens, fld)


def omega_eigenvalue(field, i, t, primed=False):
    """Eigenvalue of w_i (or w_i') on the natural basis vector v_t."""
    if t == i:
        return field.s if primed else field.r
    if t == i + 1:
        return field.r if primed else field.s
    return field.one


def tensor_action(field, n, name, tup):
    """Action of a generator on one monomial v_{t1} x ... x v_{tk}.

    Returns a dict tuple -> coefficient.  Agrees with the matrices built
    by tensor_power_rep (tested), but needs no matrix on large powers.
    """
    fam, i, inv = _parse_gen(name)
    if fam in ("w", "wp"):
        primed = fam == "wp"
        coeff = field.one
        for t in tup:
            coeff = coeff * omega_eigenvalue(field, i, t, primed)
        if inv:
            coeff = coeff**-1
        return {tup: coeff}
    out = {}
    if fam == "e":
        pref = field.one
        for pos, t in enumerate(tup):
            if t == i + 1:
                out[tup[:pos] + (i,) + tup[pos + 1:]] = pref
            pref = pref * omega_eigenvalue(field, i, t)
        return out
    if fam == "f":
        suf = field.one
        for pos in range(len(tup) - 1, -1, -1):
            t = tup[pos]
            if t == i:
                out[tup[:pos] + (i + 1,) + tup[pos + 1:]] = suf
            suf = suf * omega_eigenvalue(field, i, t, primed=True)
        return out
    raise ValueError(f"unknown generator {name!r}")


def check_defining_relations(rep):
    """Verify R1-R7 on a representation; report every identity checked."""
    n, fld = rep.n, rep.field
    r, s = fld.r, fld.s
    ident = Matrix.identity(rep.dim, fld.one)
    zero = Matrix.zero(rep.dim, rep.dim)
    checks = []

    def pairing(a, j):
        # <eps_a, alpha_j> for alpha_j = eps_j - eps_{j+1}
        return (1 if a == j else 0) - (1 if a == j + 1 else 0)

    for i in range(1, n):
        checks.append(_compare("R1:inv-w", (i,), rep.w(i) * rep.w_inv(i), ident))
        checks.append(_compare("R1:inv-wp", (i,), rep.wp(i) * rep.wp_inv(i), ident))
    for i in range(1, n):
        for j in range(1, n):
            if i < j:
                checks.append(_compare("R1:comm-ww", (i, j),
                                       rep.w(i) * rep.w(j), rep.w(j) * rep.w(i)))
                checks.append(_compare("R1:comm-wpwp", (i, j),
                                       rep.wp(i) * rep.wp(j), rep.wp(j) * rep.wp(i)))
            checks.append(_compare("R1:comm-wwp", (i, j),
                                   rep.w(i) * rep.wp(j), rep.wp(j) * rep.w(i)))
    for i in range(1, n):
        for j in range(1, n):
            a = pairing(i, j)
            b = pairing(i + 1, j)
            checks.append(_compare("R2:we", (i, j), rep.w(i) * rep.e(j),
                                   (rep.e(j) * rep.w(i)).scale(fld.rs_power(a, b))))
            checks.append(_compare("R2:wf", (i, j), rep.w(i) * rep.f(j),
                                   (rep.f(j) * rep.w(i)).scale(fld.rs_power(-a, -b))))
            checks.append(_compare("R3:wpe", (i, j), rep.wp(i) * rep.e(j),
                                   (rep.e(j) * rep.wp(i)).scale(fld.rs_power(b, a))))
            checks.append(_compare("R3:wpf", (i, j), rep.wp(i) * rep.f(j),
                                   (rep.f(j) * rep.wp(i)).scale(fld.rs_power(-b, -a))))
    coef = fld.one / (r - s)
    for i in range(1, n):
        for j in range(1, n):
            lhs = rep.e(i) * rep.f(j) - rep.f(j) * rep.e(i)
            if i == j:
                rhs = (rep.w(i) - rep.wp(i)).scale(coef)
            else:
                rhs = zero
            checks.append(_compare("R4", (i, j), lhs, rhs))
    for i in range(1, n):
        for j in range(i + 2, n):
            checks.append(_compare("R5:ee", (i, j),
                                   rep.e(i) * rep.e(j), rep.e(j) * rep.e(i)))
            checks.append(_compare("R5:ff", (i, j),
                                   rep.f(i) * rep.f(j), rep.f(j) * rep.f(i)))
    rps = r + s
    rts = r * s
    rpsi = r**-1 + s**-1
    rtsi = (r * s)**-1
    for i in range(1, n - 1):
        A, B = rep.e(i), rep.e(i + 1)
        lhs = A * A * B - (A * B * A).scale(rps) + (B * A * A).scale(rts)
        checks.append(_compare("R6:a", (i,), lhs, zero))
        lhs = A * B * B - (B * A * B).scale(rps) + (B * B * A).scale(rts)
        checks.append(_compare("R6:b", (i,), lhs, zero))
        A, B = rep.f(i), rep.f(i + 1)
        lhs = A * A * B - (A * B * A).scale(rpsi) + (B * A * A).scale(rtsi)
        checks.append(_compare("R7:a", (i,), lhs, zero))
        lhs = A * B * B - (B * A * B).scale(rpsi) + (B * B * A).scale(rtsi)
        checks.append(_compare("R7:b", (i,), lhs, zero))
    return CheckReport(checks)


@dataclass(frozen=True)
class Weight:
    """Integral weight sum_j c_j eps_j, stored as the coordinate tuple."""

    coords: tuple

    @classmethod
    def zero(cls, n):
        return cls((0,) * n)

    @classmethod
    def eps(cls, j, n):
        return cls(tuple(1 if t == j else 0 for t in range(1, n + 1)))

    @classmethod
    def fundamental(cls, k, n):
        # eps_1 + ... + eps_k
        return cls(tuple(1 if t <= k else 0 for t in range(1, n + 1)))

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def inner_eps(self, i):
        return self.coords[i - 1]

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WeightChar:
    """Character values (lambda-hat(w_i), lambda-hat(w_i')) for i = 1..n-1."""

    pairs: tuple


def weight_char(lam, n, field):
    """lambda-hat(w_i) = r^<eps_i, lam> s^<eps_{i+1}, lam>, and the primed
    character swaps the roles of r and s."""
    pairs = []
    for i in range(1, n):
        a, b = lam.inner_eps(i), lam.inner_eps(i + 1)
        pairs.append((field.rs_power(a, b), field.rs_power(b, a)))
    return WeightChar(tuple(pairs))


def _basis_weights(rep):
    """Weight of each basis vector, read off the diagonal w / w' actions."""
    n, fld = rep.n, rep.field
    expo = {}
    for i in range(1, n):
        for primed in (False, True):
            name = f"wp{i}" if primed else f"w{i}"
            mat = rep.gens[name]
            for (a, b) in mat.entries:
                if a != b:
                    raise NonDiagonalAction(
                        f"{name} has an off-diagonal entry at ({a}, {b})")
            row = []
            for t in range(1, rep.dim + 1):
                v = mat.entries.get((t, t))
                if v is None:
                    raise NonDiagonalAction(f"{name} is singular on the basis")
                ex = fld.monomial_exponents(v)
                if ex is None:
                    raise NonDiagonalAction(
                        f"{name} eigenvalue {fld.format(v)} is not r^a s^b")
                row.append(ex)
            expo[(i, primed)] = row
    weights = []
    for t in range(rep.dim):
        c = [0] * n
        c[0] = expo[(1, False)][t][0]
        for i in range(1, n):
            c[i] = expo[(i, False)][t][1]
        for i in range(1, n):
            if expo[(i, False)][t] != (c[i - 1], c[i]):
                raise NonDiagonalAction(
                    f"inconsistent w-eigenvalues on basis vector {t + 1}")
            if expo[(i, True)][t] != (c[i], c[i - 1]):
                raise NonDiagonalAction(
                    f"inconsistent w'-eigenvalues on basis vector {t + 1}")
        weights.append(Weight(tuple(c)))
    return weights


def weight_spaces(rep):
    """Decompose the underlying space into weight subspaces.

    Requires all w_i, w_i' to act diagonally with monomial eigenvalues
    (raises NonDiagonalAction otherwise).  In sampled mode the exponents
    are recovered by integer-log search on the sampled eigenvalues.
    """
    weights = _basis_weights(rep)
    fld = rep.field
    groups = {}
    for t, w in enumerate(weights, 1):
        groups.setdefault(w, []).append(t)
    return {w: Subspace.from_vectors(rep.dim, [{t: fld.one} for t in idxs])
            for w, idxs in groups.items()}


def highest_weight_vectors(rep):
    """Basis of the joint kernel of all e_i, tagged with weights."""
    fld = rep.field
    space, _, _ = kernel_image_rank(rep.e(1), fld)
    for i in range(2, rep.n):
        bm = space.basis_matrix()
        coeffs, _, _ = kernel_image_rank(rep.e(i) * bm, fld)
        vecs = [bm.apply(c) for c in coeffs.basis]
        space = Subspace.from_vectors(rep.dim, vecs)
    weights = _basis_weights(rep)
    out = []
    for vec in space.basis:
        support_weights = {weights[t - 1] for t in vec}
        if len(support_weights) != 1:
            raise NonDiagonalAction("highest weight vector is not homogeneous")
        out.append((vec, support_weights.pop()))
    return out


def hopf_antipode_check(rep):
    """Verify m (S x id) Delta(x) = eps(x) 1 on every generator.

    With S(e_i) = -w_i^{-1} e_i, S(f_i) = -f_i w_i'^{-1}, S(w_i) = w_i^{-1},
    S(w_i') = w_i'^{-1} and eps(e_i) = eps(f_i) = 0, eps(w_i) = eps(w_i') = 1.
    """
    fld = rep.field
    ident = Matrix.identity(rep.dim, fld.one)
    zero = Matrix.zero(rep.dim, rep.dim)
    checks = []
    for i in range(1, rep.n):
        E, F = rep.e(i), rep.f(i)
        W, Wp = rep.w(i), rep.wp(i)
        Winv, Wpinv = rep.w_inv(i), rep.wp_inv(i)
        # Delta(e) = e x 1 + w x e
        lhs = -(Winv * E) + Winv * E
        checks.append(_compare("antipode:e", (i,), lhs, zero))
        # Delta(f) = 1 x f + f x w'
        lhs = F + (-(F * Wpinv)) * Wp
        checks.append(_compare("antipode:f", (i,), lhs, zero))
        checks.append(_compare("antipode:w", (i,), Winv * W, ident))
        checks.append(_compare("antipode:wp", (i,), Wpinv * Wp, ident))
    return CheckReport(checks)
