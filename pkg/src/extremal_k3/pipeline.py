"""Classification of data triples (Sigma, MW, T).

For a rank-18 root type Sigma the algorithm runs over all glue subgroups:
isotropic subgroups A of the discriminant form of the root lattice,
assembled prime by prime.  Each A determines an even overlattice; the glue
must not create new roots.  The quotient form on (A_perp / A) must match,
up to sign, the discriminant form of a positive definite even binary form
[a, b, c] of the forced determinant — each match yields a data triple with
MW = A.
"""

from __future__ import annotations

import csv
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .binforms import enumerate_even_forms
from .discform import (DiscriminantForm, direct_sum, discriminant_form,
                       enumerate_isotropic, form_length, forms_isomorphic,
                       p_part, quotient_form, subgroup_invariants)
from .exact import count_roots, overlattice_gram
from .roottypes import RootType, gram_of, root_count_formula


@dataclass(frozen=True)
class DataTriple:
    sigma: str          # canonical root type string
    mw: tuple           # invariant factors, ascending; () for trivial
    form: tuple         # (a, b, c), GL2-reduced

    @property
    def mw_str(self):
        return format_mw(self.mw)

    def row(self):
        return (self.sigma, self.mw_str, *self.form)


def format_mw(invariants):
    if not invariants:
        return "1"
    return ".".join(str(x) for x in invariants)


def combine_prime_invariants(per_prime):
    """Invariant factors of a product of p-groups, each given by its own
    (length <= 2) invariant factors."""
    small = 1
    large = 1
    for inv in per_prime:
        if len(inv) == 2:
            small *= inv[0]
            large *= inv[1]
        elif len(inv) == 1:
            large *= inv[0]
    out = [x for x in (small, large) if x > 1]
    assert len(out) < 2 or out[1] % out[0] == 0
    return tuple(out)


def classify_one(sigma) -> list:
    """All data triples for one rank-18 root type, sorted."""
    if isinstance(sigma, str):
        sigma = RootType.parse(sigma)
    lat = gram_of(sigma)
    df = discriminant_form(lat)
    det = df.order
    target_roots = root_count_formula(sigma)

    per_prime = []
    for p in df.primes():
        pp = p_part(df, p)
        exponent = max(pp.orders)
        cands = []
        for sub, comp in enumerate_isotropic(pp):
            # the transcendental lattice has rank 2, so its discriminant
            # form has length <= 2 at every prime; the quotient order is
            # then at most exponent^2 (cheap test before building it)
            if pp.order > sub.order ** 2 * exponent ** 2:
                continue
            quot = quotient_form(pp, sub, comp)
            if form_length(quot) > 2:
                continue
            cands.append((sub, quot, pp))
        per_prime.append(cands)

    triples = set()
    for combo in itertools.product(*per_prime):
        a_order = 1
        for sub, _, _ in combo:
            a_order *= sub.order
        assert det % (a_order * a_order) == 0
        d = det // (a_order * a_order)

        forms = enumerate_even_forms(d)
        if not forms:
            continue
        glue_target = direct_sum(*[q for _, q, _ in combo]) if combo \
            else DiscriminantForm((), (), ())
        matches = []
        for f in forms:
            df_t = discriminant_form(f.lattice())
            try:
                # df_t comes from the negated Gram matrix, so it is already
                # the negative of the form on the positive definite [a,b,c]
                if forms_isomorphic(df_t, glue_target):
                    matches.append(f)
            except ValueError:
                continue
        if not matches:
            continue

        mw = combine_prime_invariants(
            [subgroup_invariants(pp, sub) for sub, _, pp in combo])
        new = [DataTriple(str(sigma), mw, (f.a, f.b, f.c)) for f in matches]
        if all(t in triples for t in new):
            continue

        # glue check: the overlattice must not acquire extra roots
        gens = []
        for sub, _, pp in combo:
            for g in sub.generators:
                gens.append(pp.carrier_of(g))
        if gens:
            big = overlattice_gram(lat, gens)
            if count_roots(big, limit=target_roots) != target_roots:
                continue
        triples.update(new)

    return sorted(triples, key=lambda t: (t.mw, t.form))


def _classify_worker(sigma_str):
    return sigma_str, classify_one(sigma_str)


def classify_all(sigmas=None, processes=None, progress=None):
    """Map canonical sigma string -> its (possibly empty) triple list, for
    every candidate root type."""
    from .roottypes import enumerate_list_L
    if sigmas is None:
        sigmas = enumerate_list_L()
    names = [str(s) for s in sigmas]
    out = {}
    if processes and processes > 1:
        with ProcessPoolExecutor(max_workers=processes) as ex:
            for name, triples in ex.map(_classify_worker, names,
                                        chunksize=8):
                out[name] = triples
                if progress:
                    progress(name, triples)
    else:
        for name in names:
            out[name] = classify_one(name)
            if progress:
                progress(name, out[name])
    return out


# ---------------------------------------------------------------------------
# golden-file comparison


def read_triple_table(path):
    """Rows (no, sigma, mw, a, b, c) from a semicolon-separated file."""
    rows = []
    with open(path, newline="") as fh:
        for rec in csv.reader(fh, delimiter=";"):
            if not rec or not rec[0].strip():
                continue
            no, sigma, mw, a, b, c = [x.strip() for x in rec]
            rows.append((int(no), str(RootType.parse(sigma)), mw,
                         int(a), int(b), int(c)))
    return rows


def write_triple_table(path, results):
    """Write classification results with entry numbers assigned in sigma
    string order."""
    nonempty = sorted((s for s, ts in results.items() if ts), key=str)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, delimiter=";")
        for no, sigma in enumerate(nonempty, start=1):
            for t in results[sigma]:
                w.writerow([no, sigma, t.mw_str, *t.form])


def compare_with_table(results, golden_rows):
    """Symmetric difference between computed triples and a reference table,
    ignoring entry numbers.  Returns (missing, extra) row lists."""
    ours = set()
    for sigma, triples in results.items():
        for t in triples:
            ours.add((sigma, t.mw_str, *t.form))
    ref = {(sigma, mw, a, b, c) for _, sigma, mw, a, b, c in golden_rows}
    missing = sorted(ref - ours)
    extra = sorted(ours - ref)
    return missing, extra
