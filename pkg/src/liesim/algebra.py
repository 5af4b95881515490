"""Matrix representations of the catalogued dynamical algebras.

Three families are supported: the oscillator algebra spanned by
{a, a†, n, I} on a truncated Fock space, spin su(2) in the standard
|j,m> basis, and su(3) realized by three bosonic modes at fixed total
particle number (the fully symmetric irrep).  Direct sums act on the
tensor product of the factor carrier spaces.

Basis conventions: Fock levels ascending 0..n_max; spin m descending
j..-j; su(3) occupation triples (n1,n2,n3) in lexicographic order.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .errors import DimensionCapError

DIM_CAP = 20000
HERMITICITY_TOL = 1e-12

SCHEMA_TAG = "liesim/algebra-rep/v1"

# generators whose matrices must be Hermitian, per family
_HERMITIAN_LABELS = {
    "h4": ("n", "I"),
    "su2": ("Jx", "Jy", "Jz"),
    "su3": ("X1", "X2", "Y1", "Y2", "Y3", "Z1", "Z2", "Z3"),
}


@dataclass(frozen=True)
class AlgebraRep:
    """Immutable bundle of labeled generator matrices plus structure metadata.

    ``generators`` maps label -> matrix (dense ndarray for single factors,
    scipy sparse for tensor embeddings).  ``factor_dims`` records the mode
    structure of the carrier space; ``meta`` holds family parameters
    (j, n_max, n_particles, ...).
    """

    name: str
    dim_hilbert: int
    generators: dict
    rank: int
    dim_algebra: int
    chain: str
    chain_casimirs: dict
    truncated: bool
    factor_dims: tuple = ()
    factor_names: tuple = ()
    meta: dict = field(default_factory=dict)

    def generator(self, label):
        return self.generators[label]

    @property
    def hermitian_labels(self):
        return tuple(self.meta.get("hermitian_labels", ()))


@dataclass(frozen=True)
class SdfReport:
    """Structural-degrees-of-freedom bookkeeping for one subalgebra chain."""

    n: int
    l: int
    d: int
    m: int
    chain: str
    casimir_labels: tuple

    def __post_init__(self):
        if 2 * self.d != 2 * self.l + (self.n - self.l):
            raise ValueError(f"CSDV count violates d = l + (n-l)/2: {self}")
        if 2 * self.m > self.n - self.l:
            raise ValueError(f"SDF count violates m <= (n-l)/2: {self}")


def _as_dense(m):
    return m.toarray() if sp.issparse(m) else np.asarray(m)


def _max_abs(m):
    if sp.issparse(m):
        return abs(m).max() if m.nnz else 0.0
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def _check_hermitian(label, mat):
    if _max_abs(mat - mat.conj().T) >= HERMITICITY_TOL:
        raise ValueError(f"generator {label!r} is not Hermitian to {HERMITICITY_TOL}")


def _check_cap(dim):
    if dim > DIM_CAP:
        raise DimensionCapError(f"dim_hilbert {dim} exceeds cap {DIM_CAP}")


def build_su2_rep(j) -> AlgebraRep:
    """Spin-j matrices Jx, Jy, Jz on the (2j+1)-dim |j,m> basis, m descending.

    Raises ValueError unless 2j is a non-negative integer.
    """
    twoj = 2 * j
    if twoj < 0 or abs(twoj - round(twoj)) > 1e-12:
        raise ValueError(f"spin j must be a non-negative half-integer, got {j}")
    j = round(twoj) / 2.0
    dim = int(round(twoj)) + 1
    _check_cap(dim)
    m = j - np.arange(dim)  # m descending: j, j-1, ..., -j
    jz = np.diag(m).astype(complex)
    # J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; row index of m+1 is col-1
    amp = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    jplus = np.zeros((dim, dim), complex)
    jplus[np.arange(dim - 1), np.arange(1, dim)] = amp
    jminus = jplus.conj().T
    jx = 0.5 * (jplus + jminus)
    jy = -0.5j * (jplus - jminus)
    gens = {"Jx": jx, "Jy": jy, "Jz": jz, "J+": jplus, "J-": jminus}
    for lbl in _HERMITIAN_LABELS["su2"]:
        _check_hermitian(lbl, gens[lbl])
    return AlgebraRep(
        name="su2",
        dim_hilbert=dim,
        generators=gens,
        rank=1,
        dim_algebra=3,
        chain="su2>u1",
        chain_casimirs={"Jz": jz},
        truncated=False,
        factor_dims=(dim,),
        factor_names=("su2",),
        meta={"j": j, "hermitian_labels": _HERMITIAN_LABELS["su2"]},
    )


def build_h4_rep(n_max: int) -> AlgebraRep:
    """Truncated Fock matrices a, a†, n, I on levels 0..n_max.

    [a, a†] = I holds exactly except at the top diagonal entry, so the
    rep carries truncated=True and consumers must monitor top-level
    population.  Requires n_max >= 2.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    dim = n_max + 1
    _check_cap(dim)
    a = np.diag(np.sqrt(np.arange(1, dim)), 1).astype(complex)
    adag = a.conj().T
    n = np.diag(np.arange(dim)).astype(complex)
    eye = np.eye(dim, dtype=complex)
    gens = {"a": a, "adag": adag, "n": n, "I": eye}
    for lbl in _HERMITIAN_LABELS["h4"]:
        _check_hermitian(lbl, gens[lbl])
    return AlgebraRep(
        name="h4",
        dim_hilbert=dim,
        generators=gens,
        rank=2,
        dim_algebra=4,
        chain="h4>u1xu1",
        chain_casimirs={"n": n},
        truncated=True,
        factor_dims=(dim,),
        factor_names=("h4",),
        meta={"n_max": n_max, "hermitian_labels": _HERMITIAN_LABELS["h4"]},
    )


def su3_basis(n_particles: int):
    """Occupation triples (n1,n2,n3) with n1+n2+n3 = N, lexicographic."""
    return [
        (n1, n2, n_particles - n1 - n2)
        for n1 in range(n_particles + 1)
        for n2 in range(n_particles - n1 + 1)
    ]


def build_su3_symmetric_rep(n_particles: int, dim_warn: int = 5000) -> AlgebraRep:
    """su(3) generators E_ij = a_i† a_j on the fixed-N symmetric subspace.

    Carrier dimension is (N+1)(N+2)/2.  Besides the nine E_ij the rep
    stores the eight Hermitian combinations used by the quantumness sum
    (X1, X2, Y_k, Z_k) and the chain Casimirs of
    su(3) > su(2)+u(1) > u(1): isospin T2, Tz on modes (1,2) and the
    hypercharge-type Y; quadratic/cubic invariants are kept as metadata.
    """
    if n_particles < 1:
        raise ValueError(f"n_particles must be >= 1, got {n_particles}")
    basis = su3_basis(n_particles)
    dim = len(basis)
    _check_cap(dim)
    if dim > dim_warn:
        warnings.warn(f"su(3) symmetric rep dim {dim} above advisory size {dim_warn}")
    index = {b: i for i, b in enumerate(basis)}
    E = {}
    for i in range(3):
        for jj in range(3):
            mat = np.zeros((dim, dim), complex)
            for occ, col in index.items():
                if i == jj:
                    mat[col, col] = occ[i]
                elif occ[jj] > 0:
                    dest = list(occ)
                    dest[jj] -= 1
                    dest[i] += 1
                    mat[index[tuple(dest)], col] = math.sqrt(occ[jj] * (occ[i] + 1))
            E[(i, jj)] = mat

    gens = {f"E{i+1}{jj+1}": E[(i, jj)] for i in range(3) for jj in range(3)}
    # Hermitian set: Cartan pair plus symmetric/antisymmetric mode-pair hops.
    gens["X1"] = E[(0, 0)] - E[(1, 1)]
    gens["X2"] = E[(0, 0)] + E[(1, 1)] - 2 * E[(2, 2)]
    for k in range(3):
        jj = (k + 1) % 3
        gens[f"Y{k+1}"] = 1j * (E[(k, jj)] - E[(jj, k)])
        gens[f"Z{k+1}"] = E[(k, jj)] + E[(jj, k)]
    for lbl in _HERMITIAN_LABELS["su3"]:
        _check_hermitian(lbl, gens[lbl])

    tz = 0.5 * (E[(0, 0)] - E[(1, 1)])
    t2 = tz @ tz + 0.5 * (E[(0, 1)] @ E[(1, 0)] + E[(1, 0)] @ E[(0, 1)])
    hyper = (E[(0, 0)] + E[(1, 1)] - 2 * E[(2, 2)]) / 3.0
    c2 = sum(E[(i, jj)] @ E[(jj, i)] for i in range(3) for jj in range(3))
    c3 = sum(
        E[(i, jj)] @ E[(jj, k)] @ E[(k, i)]
        for i in range(3)
        for jj in range(3)
        for k in range(3)
    )
    return AlgebraRep(
        name="su3",
        dim_hilbert=dim,
        generators=gens,
        rank=2,
        dim_algebra=8,
        chain="su3>su2+u1>u1",
        chain_casimirs={"T2": t2, "Tz": tz},
        truncated=False,
        factor_dims=(dim,),
        factor_names=("su3",),
        meta={
            "n_particles": n_particles,
            "symmetric_irrep": True,
            "hermitian_labels": _HERMITIAN_LABELS["su3"],
            "extra_casimirs": {"Y": hyper, "C2": c2, "C3": c3},
        },
    )


def _embed(mat, dims, k):
    """I x ... x mat x ... x I with mat at slot k; sparse kron embedding."""
    out = sp.identity(1, format="csr", dtype=complex)
    for i, d in enumerate(dims):
        blk = sp.csr_matrix(mat) if i == k else sp.identity(d, format="csr", dtype=complex)
        out = sp.kron(out, blk, format="csr")
    return out


def direct_sum_rep(reps) -> AlgebraRep:
    """Direct sum of algebras acting on the tensor product of carriers.

    Factor-k generators are embedded as I x..x L x..x I with labels
    suffixed _k (1-based).  Ranks, dimensions, and chain Casimir sets add.
    """
    reps = list(reps)
    if len(reps) < 2:
        raise ValueError("direct_sum_rep needs at least two factors")
    dims = [r.dim_hilbert for r in reps]
    dim = int(np.prod(dims))
    _check_cap(dim)
    gens = {}
    casimirs = {}
    herm = []
    for k, r in enumerate(reps):
        for lbl, mat in r.generators.items():
            gens[f"{lbl}_{k+1}"] = _embed(mat, dims, k)
        for lbl, mat in r.chain_casimirs.items():
            casimirs[f"{lbl}_{k+1}"] = _embed(mat, dims, k)
        herm.extend(f"{lbl}_{k+1}" for lbl in r.hermitian_labels)
    name = "+".join(r.name for r in reps)
    chain = " (+) ".join(r.chain for r in reps)
    return AlgebraRep(
        name=name,
        dim_hilbert=dim,
        generators=gens,
        rank=sum(r.rank for r in reps),
        dim_algebra=sum(r.dim_algebra for r in reps),
        chain=chain,
        chain_casimirs=casimirs,
        truncated=any(r.truncated for r in reps),
        factor_dims=tuple(dims),
        factor_names=tuple(r.name for r in reps),
        meta={
            "factors": [dict(r.meta, name=r.name) for r in reps],
            "hermitian_labels": tuple(herm),
        },
    )


def interior_mask(rep: AlgebraRep, margin: int = 2) -> np.ndarray:
    """Boolean basis mask excluding the top `margin` levels of each truncated factor.

    Compact factors contribute no exclusions.  Used to restrict residual
    checks to the subspace where truncated commutation relations hold.
    """
    masks = []
    for name, d in zip(rep.factor_names, rep.factor_dims):
        if name == "h4":
            masks.append(np.arange(d) <= d - 1 - margin)
        else:
            masks.append(np.ones(d, bool))
    out = masks[0]
    for m in masks[1:]:
        out = np.kron(out, m).astype(bool)
    return out


@dataclass(frozen=True)
class ResidualReport:
    full: float
    interior: float | None = None

    def __float__(self):
        return self.full


def commutator_residual(a, b, expected, mask=None) -> ResidualReport:
    """Max-norm of [a, b] - expected, optionally restricted to a basis mask."""
    a = _as_dense(a)
    b = _as_dense(b)
    expected = _as_dense(expected)
    if a.shape != b.shape or a.shape != expected.shape:
        raise ValueError(
            f"dimension mismatch: {a.shape} vs {b.shape} vs {expected.shape}"
        )
    res = a @ b - b @ a - expected
    full = float(np.abs(res).max())
    interior = None
    if mask is not None:
        mask = np.asarray(mask, bool)
        interior = float(np.abs(res[np.ix_(mask, mask)]).max()) if mask.any() else 0.0
    return ResidualReport(full=full, interior=interior)


_SU2_PAIR_RELATIONS = [("Jx", "Jy", "Jz"), ("Jy", "Jz", "Jx"), ("Jz", "Jx", "Jy")]

_H4_RELATIONS = [  # (a, b, coefficient, expected label or None for zero)
    ("a", "adag", 1.0, "I"),
    ("n", "adag", 1.0, "adag"),
    ("n", "a", -1.0, "a"),
    ("adag", "I", 0.0, None),
    ("a", "I", 0.0, None),
    ("n", "I", 0.0, None),
]


def _factor_closure(fam, gens, dim, mask):
    if fam == "su2":
        worst = 0.0
        for la, lb, lc in _SU2_PAIR_RELATIONS:
            worst = max(
                worst,
                commutator_residual(gens[la], gens[lb], 1j * _as_dense(gens[lc])).full,
            )
        return worst
    if fam == "h4":
        worst = 0.0
        for la, lb, coeff, lc in _H4_RELATIONS:
            expected = coeff * _as_dense(gens[lc]) if lc else np.zeros((dim, dim), complex)
            r = commutator_residual(gens[la], gens[lb], expected, mask=mask)
            worst = max(worst, r.interior if r.interior is not None else r.full)
        return worst
    if fam == "su3":
        E = {(i, jj): gens[f"E{i+1}{jj+1}"] for i in range(3) for jj in range(3)}
        worst = 0.0
        for (i, jj), eij in E.items():
            for (k, ll), ekl in E.items():
                expected = np.zeros((dim, dim), complex)
                if jj == k:
                    expected += _as_dense(E[(i, ll)])
                if i == ll:
                    expected -= _as_dense(E[(k, jj)])
                worst = max(worst, commutator_residual(eij, ekl, expected).full)
        return worst
    raise ValueError(f"no catalogued closure relations for {fam!r}")


def algebra_closure_residual(rep: AlgebraRep) -> float:
    """Worst residual over the catalogued structure relations of `rep`.

    Direct sums additionally check that generators of distinct factors
    commute.  Truncated h4 relations are interior-restricted.
    """
    nfac = len(rep.factor_dims)
    mask = interior_mask(rep) if rep.truncated else None
    if nfac == 1:
        return _factor_closure(rep.name, rep.generators, rep.dim_hilbert, mask)
    worst = 0.0
    by_factor = []
    for k, fam in enumerate(rep.factor_names):
        suffix = f"_{k+1}"
        sub = {
            lbl[: -len(suffix)]: m
            for lbl, m in rep.generators.items()
            if lbl.endswith(suffix)
        }
        by_factor.append(sub)
        worst = max(worst, _factor_closure(fam, sub, rep.dim_hilbert, mask))
    zero = np.zeros((rep.dim_hilbert, rep.dim_hilbert), complex)
    for k1 in range(nfac):
        for k2 in range(k1 + 1, nfac):
            for m1 in by_factor[k1].values():
                for m2 in by_factor[k2].values():
                    worst = max(worst, commutator_residual(m1, m2, zero).full)
    return worst


# --- SDF catalogue -----------------------------------------------------------

_SDF_TABLE = {
    ("h4", "h4>u1xu1"): dict(n=4, l=2, m=1, casimirs=("n",)),
    ("su2", "su2>u1"): dict(n=3, l=1, m=1, casimirs=("Jz",)),
    ("su3", "su3>su2+u1>u1"): dict(n=8, l=2, m=3, casimirs=("Y", "T2", "Tz")),
}


def sdf_count(rep: AlgebraRep, chain: str | None = None) -> SdfReport:
    """SDF bookkeeping for the catalogued subalgebra chain of `rep`.

    For the fully symmetric su(3) irrep the hypercharge invariant is not
    independent and the SDF count drops from 3 to 2.  Direct sums add.
    """
    chain = chain or rep.chain
    if " (+) " in chain or "+" in rep.name:
        parts = chain.split(" (+) ")
        metas = rep.meta.get("factors", [{}] * len(parts))
        if len(parts) != len(rep.factor_names):
            raise ValueError(f"unknown chain label {chain!r} for {rep.name}")
        subs = []
        for fam, part, meta in zip(rep.factor_names, parts, metas):
            subs.append(_lookup_sdf(fam, part, meta))
        n = sum(s.n for s in subs)
        l = sum(s.l for s in subs)
        m = sum(s.m for s in subs)
        labels = tuple(
            f"{lbl}_{k+1}" for k, s in enumerate(subs) for lbl in s.casimir_labels
        )
        return SdfReport(n=n, l=l, d=l + (n - l) // 2, m=m, chain=chain, casimir_labels=labels)
    return _lookup_sdf(rep.name, chain, rep.meta)


def _lookup_sdf(family, chain, meta) -> SdfReport:
    key = (family, chain)
    if key not in _SDF_TABLE:
        raise ValueError(f"unknown chain label {chain!r} for algebra {family!r}")
    row = _SDF_TABLE[key]
    n, l = row["n"], row["l"]
    m, labels = row["m"], row["casimirs"]
    if family == "su3" and meta.get("symmetric_irrep", False):
        m, labels = 2, ("T2", "Tz")
    return SdfReport(n=n, l=l, d=l + (n - l) // 2, m=m, chain=chain, casimir_labels=labels)


# --- serialization -----------------------------------------------------------


def save_rep(rep: AlgebraRep, prefix: str) -> None:
    """Write `{prefix}.json` (manifest) and `{prefix}.npz` (matrix blob)."""
    manifest = {
        "schema": SCHEMA_TAG,
        "name": rep.name,
        "dim_hilbert": rep.dim_hilbert,
        "rank": rep.rank,
        "dim_algebra": rep.dim_algebra,
        "chain": rep.chain,
        "truncated": rep.truncated,
        "factor_dims": list(rep.factor_dims),
        "factor_names": list(rep.factor_names),
        "generator_labels": list(rep.generators),
        "casimir_labels": list(rep.chain_casimirs),
        "hermitian_labels": list(rep.hermitian_labels),
        "meta": _json_meta(rep.meta),
    }
    with open(f"{prefix}.json", "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    arrays = {f"g:{lbl}": _as_dense(m) for lbl, m in rep.generators.items()}
    arrays.update({f"c:{lbl}": _as_dense(m) for lbl, m in rep.chain_casimirs.items()})
    np.savez_compressed(f"{prefix}.npz", **arrays)


def _json_meta(meta):
    out = {}
    for k, v in meta.items():
        if k == "extra_casimirs":
            out[k] = sorted(v)
        elif isinstance(v, (list, tuple)):
            out[k] = [_json_meta(x) if isinstance(x, dict) else x for x in v]
        elif isinstance(v, dict):
            out[k] = _json_meta(v)
        else:
            out[k] = v
    return out


def load_rep(prefix: str) -> AlgebraRep:
    """Inverse of save_rep (extra Casimir metadata is not round-tripped)."""
    with open(f"{prefix}.json") as fh:
        manifest = json.load(fh)
    if manifest.get("schema") != SCHEMA_TAG:
        raise ValueError(f"unsupported manifest schema: {manifest.get('schema')!r}")
    blob = np.load(f"{prefix}.npz")
    gens = {lbl: blob[f"g:{lbl}"] for lbl in manifest["generator_labels"]}
    cas = {lbl: blob[f"c:{lbl}"] for lbl in manifest["casimir_labels"]}
    meta = dict(manifest["meta"])
    meta["hermitian_labels"] = tuple(manifest["hermitian_labels"])
    return AlgebraRep(
        name=manifest["name"],
        dim_hilbert=manifest["dim_hilbert"],
        generators=gens,
        rank=manifest["rank"],
        dim_algebra=manifest["dim_algebra"],
        chain=manifest["chain"],
        chain_casimirs=cas,
        truncated=manifest["truncated"],
        factor_dims=tuple(manifest["factor_dims"]),
        factor_names=tuple(manifest["factor_names"]),
        meta=meta,
    )
