"""Property suites shared by the CLI and the acceptance tests."""
from __future__ import annotations

from collections import Counter

from .cartan import INDEX_SET, AffineType, Weight, dominant_weights, simple_root_as_weight
from .columns import (PRINTED_SIGNATURES, adjacency_delta_blocks, class_label, column_class,
                      column_classes, column_graph, psi, signature)
from .crystal import Report, isomorphism_map
from .energy import closed_form_table, printed_table, solve_energy, verify_r_matrix
from .paths import generate_paths
from .perfect import perfect_crystal, verify_perfect
from .walls import depth_of, enumerate_reduced_adjacent_pairs, generate_crystal, wall_model

TYPES = (AffineType.D4_3, AffineType.G2_1)


def cases() -> list[tuple[AffineType, Weight]]:
    """Every (type, level-1 dominant weight) pair."""
    return [(t, lam) for t in TYPES for lam in dominant_weights(t)]


def _matched(a, b) -> tuple[int, int]:
    n = len(a.labels) ** 2
    return n - len(a.diff(b)), n


def energy_suite(corrected_closed_form: bool = False) -> Report:
    rep = Report("energy")
    for t in TYPES:
        solved = solve_energy(perfect_crystal(t))
        ok, n = _matched(solved, printed_table(t))
        rep.add(f"{t} solver vs printed table", ok == n, f"{ok}/{n}")
        closed = closed_form_table(t, corrected=corrected_closed_form)
        ok, n = _matched(closed, printed_table(t))
        first = closed.diff(printed_table(t))[:2]
        rep.add(f"{t} closed-form sets vs printed table", ok == n,
                f"{ok}/{n}" + (f"; differs at {first}" if first else ""))
    return rep


def perfect_suite() -> Report:
    rep = Report("perfect")
    for t in TYPES:
        pc = perfect_crystal(t)
        sub = verify_perfect(pc)
        for name, passed, detail in sub.checks:
            rep.add(f"{t} {name}", passed, detail)
        mins = {str(lam): pc.graph.label(b) for lam, b in sorted(pc.minimal.items())}
        rep.add(f"{t} minimal elements", True, str(mins))
    return rep


def rmatrix_suite(index_range: int = 3) -> Report:
    rep = Report("rmatrix")
    for t in TYPES:
        for name, passed, detail in verify_r_matrix(t, index_range).checks:
            rep.add(f"{t} {name}", passed, detail)
    return rep


def columns_suite() -> Report:
    rep = Report("columns")
    for t in TYPES:
        cg, pg = column_graph(t), perfect_crystal(t).graph
        by_label = {c.label: c for c in column_classes(t)}
        seed = [(cg.index(class_label(t, pg.label(0))), 0)]
        m = isomorphism_map(cg, pg, seed)
        ok = m is not None and all(m[c] == psi(by_label[cg.label(c)]) for c in cg)
        rep.add(f"{t} column graph isomorphic to perfect crystal via psi", ok)
    t = AffineType.D4_3
    wrong = [(lab, i) for lab, sig in PRINTED_SIGNATURES.items() for i in INDEX_SET
             if signature(column_class(t, lab), i) != sig[i]]
    rep.add("d4_3 printed signatures vs string statistics", not wrong,
            f"{24 - len(wrong)}/24" + (f"; first {wrong[0]}" if wrong else ""))
    return rep


def adjacency_suite() -> Report:
    rep = Report("adjacent")
    expected = {AffineType.D4_3: 64, AffineType.G2_1: 225}
    for t in TYPES:
        count, pairs = enumerate_reduced_adjacent_pairs(t)
        model = wall_model(t, dominant_weights(t)[0])
        bad = [(a.label, b.label) for a, b, h in pairs
               if not model.is_reduced(_fragment(model, a, b, h))]
        rep.add(f"{t} reduced adjacent pairs", count == expected[t] and not bad,
                f"{count} pairs, {len(bad)} not reduced")
    t = AffineType.D4_3
    _, pairs = enumerate_reduced_adjacent_pairs(t)
    neg = [(a.label, b.label) for a, b, _ in pairs if adjacency_delta_blocks(a, b) < 0]
    rep.add("d4_3 block count non-decreasing leftward", not neg,
            f"{len(pairs) - len(neg)}/{len(pairs)}")
    return rep


def _fragment(model, a, b, h):
    """Wall ending in the columns (a, b), with a placed at its forced level."""
    n = model.levels_for(bytes([psi(a)]))[0]
    return model.wall([(a, n), (b, n + h)])


def walls_suite(depth: int = 8, weyl: bool = True) -> Report:
    rep = Report("walls")
    for t, lam in cases():
        tag = f"{t} {lam}"
        model = wall_model(t, lam)
        layers = model.generate_layers(depth)
        walls = [w for layer in layers for w in layer]
        seen = set(walls)
        closure, inverse, padded, hw, weights, strings = [], [], [], [], [], []
        for w in walls:
            wt = model.weight(w)
            k = model.added_blocks(w)
            if min(k) < 0 or sum(k) != depth_of(t, lam, wt):
                weights.append(w.label)
            if all(model.e(w, i) is None for i in INDEX_SET):
                hw.append(w.label)
            for i in INDEX_SET:
                eps, phi = model.epsilon_phi(w, i)
                if phi - eps != wt.pair(i):
                    strings.append((w.label, i))
                for op, back in ((model.f, model.e), (model.e, model.f)):
                    v = op(w, i)
                    if v is None:
                        continue
                    if not (model.is_reduced(v) and model.is_normalized(v)):
                        closure.append((w.label, i))
                    if back(v, i) != w:
                        inverse.append((w.label, i))
                    if op is model.e and v not in seen:
                        closure.append((w.label, i, "escapes"))
                pv = model.f(model.pad(w), i)
                if (pv if pv is None else model.normalize(pv)) != model.f(w, i):
                    padded.append((w.label, i))
        n = len(walls)
        rep.add(f"{tag} closure under E/F, reduced and normalized", not closure,
                f"{n} walls" + (f"; first {closure[0]}" if closure else ""))
        rep.add(f"{tag} E/F inverse", not inverse, f"first {inverse[0]}" if inverse else "")
        rep.add(f"{tag} unique highest weight element", hw == ["()"], str(hw[:3]))
        rep.add(f"{tag} phi - eps = <h, wt>", not strings, str(strings[:1]) if strings else "")
        rep.add(f"{tag} extra ground column is invisible", not padded,
                str(padded[:1]) if padded else "")
        try:
            generate_crystal(t, lam, depth, check_weights=True)
            dual = not weights
        except AssertionError as exc:
            dual, weights = False, [str(exc)]
        rep.add(f"{tag} incremental and closed-form weights agree, k >= 0", dual,
                str(weights[:1]) if weights else "")
        if weyl:
            bad = weyl_violations(t, lam, depth)
            rep.add(f"{tag} Weyl symmetry of multiplicities (i = 1, 2)", not bad,
                    str(bad[:1]) if bad else "")
    return rep


def weyl_violations(ctype, lam, depth):
    g = generate_crystal(ctype, lam, depth, check_weights=False)
    mult = Counter(g.weight_of(b) for b in g)
    bad = []
    for mu in list(mult):
        for i in (1, 2):
            nu = mu - mu.pair(i) * simple_root_as_weight(ctype, i)
            if depth_of(ctype, lam, nu) <= depth and mult[mu] != mult.get(nu, 0):
                bad.append((str(mu), i, mult[mu], mult.get(nu, 0)))
    return bad


def paths_suite(depth: int = 8) -> Report:
    rep = Report("paths")
    for t, lam in cases():
        walls = generate_crystal(t, lam, depth)
        paths = generate_paths(t, lam, depth)
        m = isomorphism_map(walls, paths, [(0, 0)])
        rep.add(f"{t} {lam} walls and paths isomorphic to depth {depth}", m is not None,
                f"{len(walls)} vs {len(paths)} elements")
        model = wall_model(t, lam)
        layers = model.generate_layers(depth)
        bad = [w.label for layer in layers for w in layer
               if model.from_path(model.to_path(w)) != w]
        rep.add(f"{t} {lam} from_path(to_path(w)) = w", not bad, str(bad[:1]) if bad else "")
    return rep


SUITES = {
    "energy": energy_suite,
    "perfect": perfect_suite,
    "rmatrix": rmatrix_suite,
    "columns": columns_suite,
    "adjacent": adjacency_suite,
    "walls": walls_suite,
    "paths": paths_suite,
}


def run(name: str, depth: int | None = None) -> list[Report]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n in ("walls", "paths") and depth is not None:
            out.append(SUITES[n](depth))
        else:
            out.append(SUITES[n]())
    return out
