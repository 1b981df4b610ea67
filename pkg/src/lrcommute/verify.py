"""Exhaustive desk-scale property sweeps, shared by pytest and the CLI.

Each check enumerates every instance within an ambient box bound and records
failures into a report.  Factor fillings range over packed tableaux (entries
occupying an initial segment of the alphabet); any semistandard filling is
order-isomorphic to a packed one and all the checked operations depend only
on that order type, so the sweeps cover every alphabet.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache

from .commutor import (TwoColorTableau, _run_switching, _split_cells,
                       rho1_internal, rho1_scratch, rho1_switching,
                       staged_decomposition)
from .insertion import (GluedPair, glued_pair, inner_corners,
                        internal_insert, skew_rsk_inverse)
from .knuth import knuth_class, p_tableau_rows
from .schur import (lr_coefficient, poly_add_scaled, poly_mul, schur_polynomial,
                    schur_product)
from .tableaux import (SkewShape, SkewTableau, as_partition, enumerate_ballot,
                       glue, partitions_of, reading_word, subpartitions,
                       tableau_content, yamanouchi_tableau)

MAX_STORED_FAILURES = 50


@dataclass
class VerifyReport:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, instance, expected, actual):
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append((str(instance), str(expected), str(actual)))

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        return (f"{self.name:<22} {status}  instances={self.instances}"
                f"  failures={len(self.failures)}  time={self.seconds:.1f}s")


def partitions_up_to(n):
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def packed_fillings(outer, inner) -> tuple[SkewTableau, ...]:
    """Semistandard fillings whose letters form an initial segment 1..k."""
    from .tableaux import enumerate_ssyt
    inner = inner + (0,) * (len(outer) - len(inner))
    shape = SkewShape(outer, inner)
    cells = shape.size
    if cells == 0:
        return (SkewTableau(outer, inner, ((),) * len(outer), check=False),)
    out = []
    for t in enumerate_ssyt(shape, cells):
        w = reading_word(t)
        if len(set(w)) == max(w):
            out.append(t)
    return tuple(out)


def lr_pairs(max_boxes: int):
    """Every ballot pair of partition shape with at most max_boxes boxes."""
    for lam in partitions_up_to(max_boxes):
        for mu in subpartitions(lam):
            shape = SkewShape(lam, mu + (0,) * (len(lam) - len(mu)))
            for nu in partitions_of(shape.size, max_len=len(lam)):
                for t in enumerate_ballot(shape, nu):
                    yield glued_pair(t)


def _pair_key(p: GluedPair) -> str:
    return f"{p.skew.outer}/{p.skew.inner} rows={p.skew.rows}"


# ---------------------------------------------------------------------------
# criterion sweeps

def check_involution(max_size: int = 8, seed: int = 0) -> VerifyReport:
    """rho1 o rho1 = id on all ballot pairs, via switching and internally."""
    rep = VerifyReport("involution")
    t0 = time.time()
    for p in lr_pairs(max_size):
        rep.instances += 1
        for name, rho in (("switching", rho1_switching), ("internal", rho1_internal)):
            back = rho(rho(p))
            if back != p:
                rep.fail(f"{name}: {_pair_key(p)}", _pair_key(p), _pair_key(back))
    rep.seconds = time.time() - t0
    return rep


def check_coincidence(max_size: int = 8, seed: int = 0) -> VerifyReport:
    """rho1_switching = rho1_internal = rho1_scratch on all ballot pairs."""
    rep = VerifyReport("coincidence")
    t0 = time.time()
    for p in lr_pairs(max_size):
        rep.instances += 1
        a = rho1_switching(p)
        b = rho1_internal(p)
        c = rho1_scratch(p)
        if not (a == b == c):
            rep.fail(_pair_key(p), _pair_key(a), f"{_pair_key(b)} / {_pair_key(c)}")
    rep.seconds = time.time() - t0
    return rep


def _switch_run(u, v, strategy, seed=0, note_choices=False):
    tc = TwoColorTableau.from_pair(u, v)
    cells = tc.cells
    rng = random.Random(seed) if strategy == "random" else None
    had_choice = _run_switching(cells, "u", "v", strategy, rng)
    result = _split_cells(tc.outer, tc.inner, cells, "u", "v")
    return (result, had_choice) if note_choices else result


def check_confluence(max_size: int = 8, seed: int = 0,
                     n_random: int = 20) -> VerifyReport:
    """infusion, greedy and seeded-random switch orders all agree, and the
    outputs stay Knuth equivalent to the inputs."""
    rep = VerifyReport("confluence")
    t0 = time.time()
    for gamma in partitions_up_to(max_size):
        for lam in subpartitions(gamma):
            lam_p = lam + (0,) * (len(gamma) - len(lam))
            vs = packed_fillings(gamma, lam_p)
            for mu in subpartitions(lam):
                us = packed_fillings(lam, mu + (0,) * (len(lam) - len(mu)))
                for u in us:
                    for v in vs:
                        rep.instances += 1
                        if u.size == 0 or v.size == 0:
                            continue  # no switch can ever apply
                        (s, h), had_choice = _switch_run(u, v, "greedy",
                                                         note_choices=True)
                        if (p_tableau_rows(reading_word(s)) != p_tableau_rows(reading_word(v))
                                or p_tableau_rows(reading_word(h)) != p_tableau_rows(reading_word(u))):
                            rep.fail(f"knuth: {u!r} {v!r}", "S=V, H=U classes",
                                     "mismatch")
                        if not had_choice:
                            continue  # every order is forced onto one path
                        alt = _switch_run(u, v, "infusion")
                        if alt != (s, h):
                            rep.fail(f"infusion: {u!r} {v!r}", (s, h), alt)
                        for k in range(n_random):
                            alt = _switch_run(u, v, "random", seed=seed + k)
                            if alt != (s, h):
                                rep.fail(f"random[{seed + k}]: {u!r} {v!r}",
                                         (s, h), alt)
                                break
    rep.seconds = time.time() - t0
    return rep


# --- th:U and route geometry share one sweep ------------------------------

def _strictly_left(r1, r2):
    cols1 = dict((c[0], c[1]) for c in r1)
    for row, col in r2:
        if row in cols1 and not cols1[row] < col:
            return False
    return True


def _weakly_left(r1, r2):
    cols2 = dict((c[0], c[1]) for c in r2)
    for row, col in r1:
        if row in cols2 and not col <= cols2[row]:
            return False
    return True


def _route_pair_ok(first_row, first_tr, second_row, second_tr):
    """Relative position of two successive non-blank bumping routes."""
    if first_row >= second_row:
        # case (a): earlier route strictly left, earlier box strictly left
        # of and weakly below the later one
        b, bp = first_tr.created, second_tr.created
        return (_strictly_left(first_tr.route, second_tr.route)
                and b[1] < bp[1] and b[0] >= bp[0])
    # case (b): later route weakly left, later box weakly left of and
    # strictly below the earlier one
    b, bp = first_tr.created, second_tr.created
    return (_weakly_left(second_tr.route, first_tr.route)
            and bp[1] <= b[1] and bp[0] > b[0])


_THU_CACHE: dict = {}


@lru_cache(maxsize=None)
def _class_of(word):
    return tuple(knuth_class(word, 100000))


def _thu_sweep(max_size: int, word_len: int):
    key = (max_size, word_len)
    if key in _THU_CACHE:
        return _THU_CACHE[key]
    thu_failures: list = []
    route_failures: list = []
    n_words = 0
    n_route_pairs = 0

    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            mu_p = mu + (0,) * (len(lam) - len(mu))
            for t in packed_fillings(lam, mu_p):
                classes_done: set = set()

                def visit(state, word, prev):
                    nonlocal n_words, n_route_pairs
                    for i in inner_corners(state):
                        new, tr = internal_insert(state, i)
                        w = word + (i,)
                        n_words += 1
                        if prev is not None and prev[1].route and tr.route:
                            n_route_pairs += 1
                            if not _route_pair_ok(prev[0], prev[1], i, tr):
                                if len(route_failures) < MAX_STORED_FAILURES:
                                    route_failures.append(
                                        (f"{t!r} word={w}", "route geometry",
                                         f"routes {prev[1]} then {tr}"))
                        # the applied word, reading right to left, is w
                        u = tuple(reversed(w))
                        cls = _class_of(u)
                        rep_word = min(cls)
                        if rep_word not in classes_done:
                            classes_done.add(rep_word)
                            if len(cls) > 1:
                                _check_class(t, u, cls, thu_failures)
                        if len(w) < word_len:
                            visit(new, w, (i, tr))

                def _check_class(tab, u, cls, sink):
                    from .insertion import apply_order_word
                    try:
                        base = apply_order_word(tab, u)
                    except ValueError as exc:
                        if len(sink) < MAX_STORED_FAILURES:
                            sink.append((f"{tab!r} u={u}", "u applies", str(exc)))
                        return
                    for v in cls:
                        if v == u:
                            continue
                        try:
                            other = apply_order_word(tab, v)
                        except ValueError as exc:
                            if len(sink) < MAX_STORED_FAILURES:
                                sink.append((f"{tab!r} v={v}", "v applies",
                                             str(exc)))
                            continue
                        if other != base:
                            if len(sink) < MAX_STORED_FAILURES:
                                sink.append((f"{tab!r} u={u} v={v}",
                                             f"{base!r}", f"{other!r}"))

                visit(t, (), None)

    result = (thu_failures, route_failures, n_words, n_route_pairs)
    _THU_CACHE[key] = result
    return result


def check_knuth_commutativity(max_size: int = 7, seed: int = 0,
                              word_len: int = 5) -> VerifyReport:
    """Knuth-equivalent order words stay valid and act identically."""
    rep = VerifyReport("knuth-commutativity")
    t0 = time.time()
    thu_failures, _route, n_words, _pairs = _thu_sweep(max_size, word_len)
    rep.instances = n_words
    rep.failures = list(thu_failures)
    rep.seconds = time.time() - t0
    return rep


def check_route_geometry(max_size: int = 7, seed: int = 0,
                         word_len: int = 5) -> VerifyReport:
    """Successive bumping routes keep their expected relative positions."""
    rep = VerifyReport("route-geometry")
    t0 = time.time()
    _thu, route_failures, _n, n_pairs = _thu_sweep(max_size, word_len)
    rep.instances = n_pairs
    rep.failures = list(route_failures)
    rep.seconds = time.time() - t0
    return rep


def check_skew_rsk(max_size: int = 6, seed: int = 0) -> VerifyReport:
    """Forward-then-inverse identity plus class preservation for all
    shared-border pairs within the ambient bound."""
    from .insertion import _forward_core, _standard_values
    from .tableaux import companion_word
    rep = VerifyReport("skew-rsk")
    t0 = time.time()
    by_mu: dict = {}
    for lam in partitions_up_to(max_size):
        for mu in subpartitions(lam):
            by_mu.setdefault(mu, []).append(lam)
    for mu, lams in by_mu.items():
        t_side = []
        for lam in lams:
            t_side.extend(packed_fillings(lam, mu + (0,) * (len(lam) - len(mu))))
        pre_t = [(t, p_tableau_rows(reading_word(t))) for t in t_side]
        for u in t_side:
            rev_word = tuple(reversed(companion_word(u)))
            values = _standard_values(u)
            w_u = p_tableau_rows(reading_word(u))
            for t, w_t in pre_t:
                rep.instances += 1
                p, q = _forward_core(t, rev_word, values, check=False)
                if as_partition(p.outer) != as_partition(q.outer):
                    rep.fail(f"{t!r} {u!r}", "shared outer border",
                             f"{p.outer} vs {q.outer}")
                    continue
                if p_tableau_rows(reading_word(p)) != w_t:
                    rep.fail(f"{t!r} {u!r}", "P = T class", f"{p!r}")
                if p_tableau_rows(reading_word(q)) != w_u:
                    rep.fail(f"{t!r} {u!r}", "Q = U class", f"{q!r}")
                t2, u2 = skew_rsk_inverse(p, q)
                if t2 != t or u2 != u:
                    rep.fail(f"{t!r} {u!r}", "round trip", f"{t2!r} {u2!r}")
    rep.seconds = time.time() - t0
    return rep


@lru_cache(maxsize=None)
def _schur_poly(lam, n_vars):
    return schur_polynomial(lam, n_vars)


def check_lr_oracle(max_size: int = 8, seed: int = 0) -> VerifyReport:
    """Ballot-tableau counts match the polynomial product coefficient by
    coefficient, and the commutor witnesses the symmetry bijectively."""
    rep = VerifyReport("lr-oracle")
    t0 = time.time()
    for a in range(max_size + 1):
        for b in range(max_size + 1 - a):
            n_vars = max(1, a + b)
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    rep.instances += 1
                    expansion = schur_product(mu, nu, max_rows=n_vars)
                    lhs = poly_mul(_schur_poly(mu, n_vars),
                                   _schur_poly(nu, n_vars))
                    rhs: dict = {}
                    for lam, c in expansion.items():
                        poly_add_scaled(rhs, _schur_poly(lam, n_vars), c)
                    if lhs != rhs:
                        rep.fail(f"mu={mu} nu={nu}", "product identity",
                                 "coefficient mismatch")
                    for lam, c in expansion.items():
                        c_rev = lr_coefficient(lam, nu, mu)
                        if c_rev != c:
                            rep.fail(f"{lam} {mu} {nu}", c, c_rev)
                        shape = SkewShape(lam, mu + (0,) * (len(lam) - len(mu)))
                        witnesses = enumerate_ballot(shape, nu)
                        image = {rho1_switching(glued_pair(t)).skew
                                 for t in witnesses}
                        target_shape = SkewShape(
                            lam, nu + (0,) * (len(lam) - len(nu)))
                        target = set(enumerate_ballot(target_shape, mu))
                        if image != target:
                            rep.fail(f"{lam} {mu} {nu}",
                                     "bijection onto opposite ballot set",
                                     f"{len(image)} vs {len(target)}")
    rep.seconds = time.time() - t0
    return rep


def check_recursion(max_size: int = 8, seed: int = 0) -> VerifyReport:
    """Staged switching stops with the expected row structure, and the
    commutor factors through the intermediate state."""
    rep = VerifyReport("recursion")
    t0 = time.time()
    for p in lr_pairs(max_size):
        t = p.skew
        lam, mu = t.outer, as_partition(t.inner)
        np1 = len(lam)
        if np1 < 2 or not mu or len(mu) > np1 - 1:
            continue
        last = t.rows[-1]
        f_word = tuple(x for x in last if x <= np1 - 1)
        if not f_word:
            continue
        rep.instances += 1
        sd = staged_decomposition(p)
        d, s, f_hat, big_d, q = sd
        if any(x != d for x in big_d) or len(big_d) != len(f_word) - len(f_hat) \
                or not big_d:
            rep.fail(_pair_key(p), "D = d^{|F|-|F hat|}, nonempty",
                     f"d={d} D={big_d} F={f_word} Fhat={f_hat}")
        if any(q.rows[k] for k in range(d - 1)):
            rep.fail(_pair_key(p), "Q empty above row d", f"{q!r}")
        nu = as_partition(tableau_content(t))
        if p_tableau_rows(reading_word(s)) != yamanouchi_tableau(nu).rows:
            rep.fail(_pair_key(p), "S = Y_nu class", f"{s!r}")
        shifted = tuple((d + k,) * mu[d - 1 + k] for k in range(len(mu) - d + 1)
                        if mu[d - 1 + k])
        if p_tableau_rows(reading_word(q)) != shifted:
            rep.fail(_pair_key(p), "Q = shifted Yamanouchi class", f"{q!r}")
        full = rho1_switching(p)
        part = rho1_switching(glued_pair(s))
        combined = GluedPair(part.yam, glue(part.skew, q))
        if combined != full:
            rep.fail(_pair_key(p), _pair_key(full), _pair_key(combined))
    rep.seconds = time.time() - t0
    return rep


CHECKS = {
    "involution": check_involution,
    "coincidence": check_coincidence,
    "confluence": check_confluence,
    "knuth-commutativity": check_knuth_commutativity,
    "route-geometry": check_route_geometry,
    "skew-rsk": check_skew_rsk,
    "lr-oracle": check_lr_oracle,
    "recursion": check_recursion,
}


def run_checks(names, max_size: int, seed: int = 0) -> list[VerifyReport]:
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; valid names: "
                         f"{', '.join(sorted(CHECKS))}")
    return [CHECKS[n](max_size=max_size, seed=seed) for n in names]
