"""Replay of the worked examples kept under fixtures/, byte-exact.

Each runner loads one fixture, recomputes the displayed objects and compares
exactly; mismatches carry a grid diff.  ``run_golden`` drives them all and is
what the CLI's golden subcommand and the acceptance suite call.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from importlib import resources

from .commutor import (TwoColorTableau, _find_sites, _swap, chi_append,
                       gt_order_word, nu_hat, rho1_internal, rho1_scratch,
                       rho1_switching, staged_decomposition, switch_sites,
                       switching)
from .insertion import (GluedPair, apply_order_word, extended_insert,
                        glued_pair, internal_insert)
from .knuth import knuth_equivalent
from .tableaux import (EMPTY, SkewTableau, as_partition, companion_word,
                       content, from_json_dict, glue, is_ballot, reading_word,
                       restrict_rows, standardize, to_text, yamanouchi_tableau)


@dataclass
class GoldenResult:
    name: str
    passed: bool = True
    messages: list = field(default_factory=list)

    def check(self, label, expected, actual):
        if expected != actual:
            self.passed = False
            self.messages.append(
                f"{label}:\n  expected {_show(expected)}\n  actual   {_show(actual)}")

    def line(self) -> str:
        return f"golden {self.name:<14} {'pass' if self.passed else 'FAIL'}"


def _show(x) -> str:
    if isinstance(x, SkewTableau):
        return f"{x.outer}/{x.inner}\n" + to_text(x)
    if isinstance(x, GluedPair):
        return f"yam {x.yam.outer}, skew {x.skew.outer}/{x.skew.inner} {x.skew.rows}"
    return repr(x)


def _load(name: str) -> dict:
    ref = resources.files("lrcommute.fixtures").joinpath(name)
    return json.loads(ref.read_text())


def _tab(d: dict) -> SkewTableau:
    return from_json_dict(d)


def _cells(entries) -> dict:
    return {(r, c): (val, color) for r, c, val, color in entries}


def _frozen(cells):
    return frozenset(cells.items())


def _reachable(start, target, cap=200000) -> bool:
    """Best-first search through admissible switches from one two-color
    state to another."""
    def dist(cells):
        return sum(1 for k, v in target.items() if cells.get(k) != v)

    seen = {_frozen(start)}
    heap = [(dist(start), 0, start)]
    tick = 0
    while heap and len(seen) < cap:
        d, _, cells = heapq.heappop(heap)
        if d == 0:
            return True
        for site in _find_sites(cells):
            nxt = dict(cells)
            _swap(nxt, site.cell_u, site.cell_v)
            key = _frozen(nxt)
            if key not in seen:
                seen.add(key)
                tick += 1
                heapq.heappush(heap, (dist(nxt), tick, nxt))
    return False


# ---------------------------------------------------------------------------

def _run_companion_word(res: GoldenResult, data: dict):
    u, v, std = _tab(data["u"]), _tab(data["v"]), _tab(data["std"])
    word = tuple(data["companion"])
    res.check("std U", std, standardize(u))
    res.check("std V", std, standardize(v))
    for name, t in (("R(U)", u), ("R(V)", v), ("R(std)", std)):
        res.check(name, word, companion_word(t))


def _run_ballot_words(res: GoldenResult, data: dict):
    h, t = _tab(data["h"]), _tab(data["t"])
    res.check("word of H", tuple(data["word_h"]), reading_word(h))
    res.check("word of T", tuple(data["word_t"]), reading_word(t))
    res.check("H ballot", data["ballot_h"], is_ballot(reading_word(h)))
    res.check("T ballot", data["ballot_t"], is_ballot(reading_word(t)))


def _run_switch_sequence(res: GoldenResult, data: dict):
    frames = [_cells(f) for f in data["frames"]]
    u, v = _tab(data["u"]), _tab(data["v"])
    start = TwoColorTableau.from_pair(u, v)
    res.check("first frame", frames[0], start.cells)
    for k in range(len(frames) - 1):
        ok = _reachable(frames[k], frames[k + 1])
        res.check(f"frame {k + 1} -> {k + 2} by switches", True, ok)
    res.check("first frame admits a switch", True, bool(switch_sites(start)))
    for strategy in ("greedy", "infusion", "random"):
        s, h = switching(u, v, strategy=strategy, seed=1)
        res.check(f"terminal S ({strategy})", _tab(data["terminal_s"]), s)
        res.check(f"terminal H ({strategy})", _tab(data["terminal_h"]), h)


def _run_insertion_words(res: GoldenResult, data: dict):
    t = _tab(data["t"])
    expected = _tab(data["result"])
    word = tuple(data["word"])
    word_p = tuple(data["word_prime"])
    res.check("R(U)", word, companion_word(_tab(data["u"])))
    res.check("R(U')", word_p, companion_word(_tab(data["u_prime"])))
    res.check("words Knuth equivalent", True, knuth_equivalent(word, word_p))
    res.check("phi_u T", expected, apply_order_word(t, word))
    res.check("phi_v T", expected, apply_order_word(t, word_p))


def _run_staged_switching(res: GoldenResult, data: dict):
    a = data["a"]
    pair_a = glued_pair(_tab(a["t"]))
    sd = staged_decomposition(pair_a)
    res.check("a: d", a["d"], sd.d)
    res.check("a: F", tuple(a["f"]),
              tuple(x for x in pair_a.skew.rows[-1] if x <= len(pair_a.skew.outer) - 1))
    res.check("a: F hat", tuple(a["f_hat"]), sd.f_hat)
    res.check("a: D", tuple(a["big_d"]), sd.big_d)
    res.check("a: S", _tab(a["s"]), sd.s)
    res.check("a: Q", _tab(a["q"]), sd.q)
    start = TwoColorTableau.from_pair(pair_a.yam, pair_a.skew).cells
    mid = _cells(a["frame_mid"])
    final = _cells(a["frame_final"])
    res.check("a: mid frame reachable", True, _reachable(start, mid))
    res.check("a: final frame reachable from mid", True, _reachable(mid, final))

    b = data["b"]
    pair_b = glued_pair(_tab(b["t"]))
    sdb = staged_decomposition(pair_b)
    res.check("b: d", b["d"], sdb.d)
    res.check("b: G hat", tuple(b["g_hat"]), sdb.f_hat)
    res.check("b: D", tuple(b["big_d"]), sdb.big_d)
    res.check("b: X", tuple(b["x"]), sdb.q.rows[-1][len(tuple(a["big_d"])):])
    res.check("b: S", _tab(b["s"]), sdb.s)
    res.check("b: Q", _tab(b["q"]), sdb.q)
    start_b = TwoColorTableau.from_pair(pair_b.yam, pair_b.skew).cells
    res.check("b: final frame reachable", True,
              _reachable(start_b, _cells(b["frame_final"])))


def _run_row_recursion(res: GoldenResult, data: dict):
    t = _tab(data["t"])
    res.check("content", tuple(data["nu"]), as_partition(content(reading_word(t))))
    res.check("nu hat", tuple(data["nu_hat"]), nu_hat(t))
    word = tuple(data["gt_word"])
    res.check("order word of the pattern", word, gt_order_word(t))
    res.check("order word builds the diagram",
              yamanouchi_tableau(tuple(data["nu"])).outer,
              apply_order_word(EMPTY, word).outer)

    # flat scratch construction, one displayed frame per row block
    cur = EMPTY
    hats = nu_hat(t)
    for k in range(len(t.outer)):
        i = k + 1
        row = t.rows[k]
        v_word = [x for x in row if x < i]
        h = hats[k] if k < len(hats) else 0
        for _ in range(h):
            cur, _tr = internal_insert(cur, i)
        for x in reversed(v_word):
            cur, _tr = internal_insert(cur, x)
        for _ in range(t.inner[k]):
            cur = chi_append(GluedPair(EMPTY, cur), i).skew
        res.check(f"scratch frame {i}", _tab(data["scratch_frames"][k]), cur)

    # level by level: switching result, operator frames, recursion result
    state = GluedPair(EMPTY, EMPTY)
    for level in data["rho_levels"]:
        k = level["k"]
        _rest, topk = restrict_rows(t, k)
        sub_pair = glued_pair(topk)
        for step, frame in zip(level["steps"], level["frames"]):
            op, i = step
            if op == "phibar":
                state = extended_insert(state, i)
            else:
                state = chi_append(state, i)
            if frame is not None:
                res.check(f"rho^({k}) frame after {op}_{i}",
                          _tab(frame), state.skew)
        expected = glued_pair(_tab(level["result"]))
        res.check(f"rho^({k}) recursion result", expected, state)
        res.check(f"rho^({k}) switching", expected, rho1_switching(sub_pair))
        res.check(f"rho^({k}) internal", expected, rho1_internal(sub_pair))
    res.check("rho^(5) scratch", state, rho1_scratch(glued_pair(t)))


def _run_factored_commutor(res: GoldenResult, data: dict):
    pair = glued_pair(_tab(data["t"]))
    sd = staged_decomposition(pair)
    full = rho1_switching(pair)
    res.check("rho1 of the full pair", glued_pair(_tab(data["rho4_full"])), full)
    part = rho1_switching(glued_pair(sd.s))
    res.check("rho1 of the staged state", glued_pair(_tab(data["rho4_part"])), part)
    res.check("gluing identity", full,
              GluedPair(part.yam, glue(part.skew, sd.q)))
    _rest, s2 = restrict_rows(sd.s, 2)
    res.check("rho1 of the two-row restriction",
              glued_pair(_tab(data["rho2_sub"])), rho1_switching(glued_pair(s2)))
    b_state = _tab(data["rho3_b_state"])
    res.check("rho1 of the b-level state",
              glued_pair(_tab(data["rho3_b_result"])),
              rho1_switching(glued_pair(b_state)))
    w1, w2 = tuple(data["word_lhs"]), tuple(data["word_rhs"])
    res.check("row words Knuth equivalent", True, knuth_equivalent(w1, w2))
    base = rho1_switching(glued_pair(s2)).skew
    res.check("operator words act identically",
              apply_order_word(base, w1), apply_order_word(base, w2))


RUNNERS = {
    "companion-word": ("companion_word.json", _run_companion_word),
    "ballot-words": ("ballot_words.json", _run_ballot_words),
    "switch-sequence": ("switch_sequence.json", _run_switch_sequence),
    "insertion-words": ("insertion_words.json", _run_insertion_words),
    "staged-switching": ("staged_switching.json", _run_staged_switching),
    "row-recursion": ("row_recursion.json", _run_row_recursion),
    "factored-commutor": ("factored_commutor.json", _run_factored_commutor),
}


def run_golden(ids=None, data_override: dict | None = None) -> list[GoldenResult]:
    """Replay the selected examples (all by default); ``data_override`` maps
    an example id to replacement fixture data, for testing the harness."""
    if ids is None:
        ids = list(RUNNERS)
    results = []
    for name in ids:
        if name not in RUNNERS:
            raise ValueError(f"unknown example {name!r}; valid ids: "
                             f"{', '.join(RUNNERS)}")
        fname, fn = RUNNERS[name]
        data = (data_override or {}).get(name) or _load(fname)
        res = GoldenResult(name)
        try:
            fn(res, data)
        except Exception as exc:  # a broken fixture should report, not crash
            res.passed = False
            res.messages.append(f"error: {exc}")
        results.append(res)
    return results
