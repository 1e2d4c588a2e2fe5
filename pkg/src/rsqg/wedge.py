"""(r,s)-exterior powers of the natural module via the fusion quotient.

The tensor square splits into the (r,s)-symmetric square S2, spanned by
v_i x v_i and v_i x v_j + s v_j x v_i (i < j), and the (r,s)-exterior
square spanned by v_i x v_j - r v_j x v_i; both are cut out by the
spectral R-matrix at the special points r s^{-1} and r^{-1} s.  The k-th
wedge module is the quotient of V^{x k} by the sum of all identity-padded
insertions of S2.  Coset representatives are taken at the non-pivot
coordinates of the trailing-pivot echelon form, which are exactly the
strictly increasing index tuples, so the quotient basis is the familiar
v_{i1} ^ ... ^ v_{ik} with i1 < ... < ik and dimension C(n, k).

Every relation vector has at most two nonzero coordinates, and trailing-
pivot elimination preserves that sparsity, so ranks stay cheap even when
the ambient dimension n^k is large.
"""

from __future__ import annotations

import math
from itertools import combinations

from .linalg import (Matrix, Subspace, _Echelon, kernel_image_rank,
                     quotient_data, tensor_index, tensor_tuple)
from .rmatrix import build_r_z
from .uqrs import (CheckItem, CheckReport, InvalidPower, InvalidRank,
                   Representation, Weight, check_defining_relations,
                   natural_rep, tensor_action, tensor_power_rep, weight_char,
                   weight_spaces)


class WellDefinednessFailure(AssertionError):
    """The relation subspace is not preserved by a generator action."""


def sym2(n, field):
    """The (r,s)-symmetric square of V inside V x V."""
    if n < 1:
        raise InvalidRank("rank parameter n must be at least 1")
    one, s = field.one, field.s
    vecs = [{tensor_index((i, i), n): one} for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vecs.append({tensor_index((i, j), n): one,
                         tensor_index((j, i), n): s})
    return Subspace.from_vectors(n * n, vecs)


def alt2(n, field):
    """The (r,s)-exterior square of V inside V x V."""
    if n < 1:
        raise InvalidRank("rank parameter n must be at least 1")
    one, r = field.one, field.r
    vecs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            vecs.append({tensor_index((i, j), n): one,
                         tensor_index((j, i), n): -r})
    return Subspace.from_vectors(n * n, vecs)


def spectral_projector_check(n, field):
    """The special evaluations of R(z) cut out the two squares:
    Im R(rs^{-1}) = S2 = Ker R(r^{-1}s) and Ker R(rs^{-1}) = Alt2 = Im R(r^{-1}s)."""
    if n < 2:
        raise InvalidRank("projector check needs n >= 2")
    rz = build_r_z(n, field)
    rs = field.r * field.s**-1
    s2 = sym2(n, field)
    a2 = alt2(n, field)
    ker_rs, im_rs, _ = kernel_image_rank(rz.at(rs), field)
    ker_sr, im_sr, _ = kernel_image_rank(rz.at(rs**-1), field)
    return CheckReport([
        CheckItem("image R(rs^-1) = sym2", (n,), im_rs == s2),
        CheckItem("kernel R(rs^-1) = alt2", (n,), ker_rs == a2),
        CheckItem("kernel R(r^-1 s) = sym2", (n,), ker_sr == s2),
        CheckItem("image R(r^-1 s) = alt2", (n,), im_sr == a2),
    ])


def _sym2_specs(n, field):
    """Spanning vectors of S2 as ((pair, coeff), ...) tuples."""
    one, s = field.one, field.s
    specs = [(((i, i), one),) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            specs.append((((i, j), one), ((j, i), s)))
    return specs


def _insertion_vectors(n, k, field):
    """All identity-padded insertions of the S2 spanning vectors into
    V^{x k}, as sparse ambient coordinate vectors (deterministic order)."""
    specs = _sym2_specs(n, field)
    for p in range(k - 1):
        right = n**(k - p - 2)
        for a in range(n**p):
            base = a * n * n
            for spec in specs:
                for b in range(right):
                    yield {(base + (x - 1) * n + (y - 1)) * right + b + 1: c
                           for (x, y), c in spec}


def _relation_subspace(n, k, field):
    if k == 1:
        return Subspace.zero(n)
    return Subspace.from_vectors(n**k, _insertion_vectors(n, k, field))


def wedge_dimension(n, k, field):
    """dim of the k-th wedge quotient, by rank of the relation span only.

    The elimination loop is inlined: relation vectors are 2-sparse and
    stay 2-sparse under trailing-pivot reduction, so each insertion is a
    short straightening walk.  This makes n^k ambient dimensions in the
    hundreds of thousands tractable.
    """
    if n < 2:
        raise InvalidRank("rank parameter n must be at least 2")
    if k < 0:
        raise InvalidPower("tensor power k must be nonnegative")
    if k == 0:
        return 1
    if k == 1:
        return n
    rows = {}
    for vec in _insertion_vectors(n, k, field):
        while vec:
            p = max(vec)
            row = rows.get(p)
            if row is None:
                c = vec[p]
                rows[p] = {t: v / c for t, v in vec.items()}
                break
            c = vec[p]
            for t, v in row.items():
                cur = vec.get(t)
                nv = -(c * v) if cur is None else cur - c * v
                if nv:
                    vec[t] = nv
                else:
                    vec.pop(t, None)
    return n**k - len(rows)


def _apply_gen(field, n, k, name, vec):
    """Generator action on an ambient coordinate vector, monomial by
    monomial, without materializing the tensor power matrices."""
    out = {}
    for t, c in vec.items():
        for tup, c2 in tensor_action(field, n, name, tensor_tuple(t, n, k)).items():
            i = tensor_index(tup, n)
            cur = out.get(i)
            nv = c * c2 if cur is None else cur + c * c2
            if nv:
                out[i] = nv
            elif cur is not None:
                del out[i]
    return out


class QuotientModule:
    """The k-th (r,s)-wedge module as an explicit quotient of V^{x k}."""

    __slots__ = ("n", "k", "field", "sub", "qdata", "induced", "labels",
                 "_ambient")

    def __init__(self, n, k, field, sub, qdata, induced, labels):
        self.n = n
        self.k = k
        self.field = field
        self.sub = sub
        self.qdata = qdata
        self.induced = induced
        self.labels = labels
        self._ambient = None

    @property
    def dim(self):
        return self.induced.dim

    @property
    def ambient(self):
        """Tensor power representation the quotient was carved from
        (built on first use; large powers never need it)."""
        if self._ambient is None:
            self._ambient = tensor_power_rep(natural_rep(self.n, self.field),
                                             self.k)
        return self._ambient

    def straighten(self, tup):
        """Expansion of the coset of v_{t1} x ... x v_{tk} in the wedge
        basis, as a map label -> coefficient (empty when the coset is 0)."""
        tup = tuple(tup)
        if len(tup) != self.k:
            raise ValueError(f"expected a {self.k}-tuple")
        if any(t < 1 or t > self.n for t in tup):
            raise ValueError("tuple entries must lie in 1..n")
        amb = {tensor_index(tup, self.n): self.field.one}
        out = self.qdata.project_vector(amb)
        return {self.labels[i - 1]: c for i, c in sorted(out.items())}

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "dim": self.dim,
            "labels": [list(t) for t in self.labels],
            "generators": {name: self.induced.gens[name].to_json(self.field)
                           for name in self.induced.generator_names()},
        }

    def __repr__(self):
        return f"QuotientModule(n={self.n}, k={self.k}, dim={self.dim})"


def build_wedge_module(n, k, field):
    """Quotient of V^{x k} by all S2 insertions, with induced generators.

    Verifies that every generator preserves the relation subspace
    (WellDefinednessFailure otherwise) and that the induced matrices
    satisfy the defining relations.  For k > n this is the zero module.
    """
    if n < 2:
        raise InvalidRank("rank parameter n must be at least 2")
    if k < 1:
        raise InvalidPower("tensor power k must be at least 1")
    sub = _relation_subspace(n, k, field)
    qd = quotient_data(sub, field)
    labels = [tensor_tuple(t, n, k) for t in qd.rep_indices]
    names = [f"{fam}{i}{suf}" for fam, suf in
             (("e", ""), ("f", ""), ("w", ""), ("wp", ""),
              ("w", "_inv"), ("wp", "_inv")) for i in range(1, n)]
    for name in names:
        for row in sub.basis:
            img = _apply_gen(field, n, k, name, row)
            if not sub.contains_vector(img):
                raise WellDefinednessFailure(
                    f"{name} does not preserve the relation subspace "
                    f"at (n, k) = ({n}, {k})")
    d = len(labels)
    gens = {}
    for name in names:
        ent = {}
        for col, lab in enumerate(labels, 1):
            amb = {tensor_index(t, n): c
                   for t, c in tensor_action(field, n, name, lab).items()}
            for i, v in qd.project_vector(amb).items():
                ent[(i, col)] = v
        gens[name] = Matrix(d, d, ent, _clean=True)
    induced = Representation(n, d, gens, field)
    report = check_defining_relations(induced)
    if not report.ok:
        bad = ", ".join(c.name for c in report.failures())
        raise WellDefinednessFailure(
            f"induced matrices at (n, k) = ({n}, {k}) violate {bad}")
    return QuotientModule(n, k, field, sub, qd, induced, labels)


def straighten(n, k, tup, field):
    """Standalone straightening of one monomial (builds the quotient data,
    so prefer QuotientModule.straighten for repeated use)."""
    sub = _relation_subspace(n, k, field)
    qd = quotient_data(sub, field)
    labels = [tensor_tuple(t, n, k) for t in qd.rep_indices]
    tup = tuple(tup)
    if len(tup) != k:
        raise ValueError(f"expected a {k}-tuple")
    if any(t < 1 or t > n for t in tup):
        raise ValueError("tuple entries must lie in 1..n")
    out = qd.project_vector({tensor_index(tup, n): field.one})
    return {labels[i - 1]: c for i, c in sorted(out.items())}


def verify_fundamental(n, k, field, module=None):
    """Check that the k-th wedge module is the fundamental module:
    the coset of v_1 x ... x v_k is a highest weight vector with weight
    character of eps_1 + ... + eps_k, the dimension is C(n, k), weights
    are the k-subsets of {eps_i} each with multiplicity one, and the f_i
    generate everything from the highest vector."""
    if n < 2:
        raise InvalidRank("rank parameter n must be at least 2")
    if not 1 <= k <= n:
        raise InvalidPower("fundamental module verification needs 1 <= k <= n")
    mod = module if module is not None else build_wedge_module(n, k, field)
    ind = mod.induced
    checks = []
    want = math.comb(n, k)
    checks.append(CheckItem("dimension = C(n, k)", (n, k), ind.dim == want))
    top = tuple(range(1, k + 1))
    if top not in mod.labels:
        checks.append(CheckItem("highest label present", (n, k), False))
        return CheckReport(checks)
    hv = {mod.labels.index(top) + 1: field.one}
    for i in range(1, n):
        checks.append(CheckItem("e kills highest vector", (i,),
                                ind.e(i).apply(hv) == {}))
    wc = weight_char(Weight.fundamental(k, n), n, field)
    for i in range(1, n):
        cw, cwp = wc.pairs[i - 1]
        ok_w = ind.w(i).apply(hv) == {t: cw * c for t, c in hv.items()}
        ok_wp = ind.wp(i).apply(hv) == {t: cwp * c for t, c in hv.items()}
        checks.append(CheckItem("highest weight matches fundamental", (i,),
                                ok_w and ok_wp))
    expected = set()
    for lab in combinations(range(1, n + 1), k):
        w = Weight.zero(n)
        for t in lab:
            w = w + Weight.eps(t, n)
        expected.add(w)
    spaces = weight_spaces(ind)
    mult_one = all(sp.dim == 1 for sp in spaces.values())
    checks.append(CheckItem("weights are the k-subsets", (n, k),
                            set(spaces) == expected and mult_one
                            and len(spaces) == want))
    ech = _Echelon()
    ech.insert(hv)
    frontier = [hv]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(1, n):
                img = ind.f(i).apply(v)
                if img and ech.insert(img) is not None:
                    nxt.append(img)
        frontier = nxt
    checks.append(CheckItem("cyclic under the f action", (n, k),
                            ech.rank == ind.dim))
    return CheckReport(checks)
