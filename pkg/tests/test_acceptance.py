"""End-to-end acceptance battery.

Nine criteria, each emitting one 'ACCEPTANCE <k> <name>: PASS|FAIL' line
(replayed in the terminal summary by conftest).  Each criterion recomputes
its expected values from scratch at run time: targets are rebuilt by
complement-of-subdivision, optima come from the brute-force solvers, and
the corpus constructions are re-checked with the test-local intersection
predicate.  Verdict lines are always emitted, even when a computation
crashes; the assertion then carries the details.
"""

import json
import random
import time
from fractions import Fraction

from multint.approx import approx_clique_t, exact_clique_2track, stab_weight_scan
from multint.cli import main as cli_main
from multint.constructions import (
    k5_unit_2circular_track,
    rep_co_subd2_2circular_track,
    rep_co_subd2_3track,
    rep_co_subd2_unit2circular_interval,
    rep_co_subd2_unit3interval,
    rep_co_subd2_unit4track,
    rep_co_subd4_2interval,
)
from multint.gadgets import QParams, build_q, rep_co_q_unit2interval, rep_co_q_unit3track
from multint.graph import (
    complement,
    complete_graph,
    graph_to_json_dict,
    is_clique,
    is_independent_set,
    max_independent_set_bruteforce,
    subdivide,
)
from multint.representation import (
    Kind,
    Piece,
    Representation,
    intersection_graph,
    is_unit,
    representation_to_json_dict,
    verify_representation,
)
from multint.solvers import max_weight_clique_bruteforce, max_weight_clique_cobipartite
from bruteforce import oracle_realizes

from multint.corpus import (
    random_cobipartite_instance,
    random_original_graph,
    random_representation,
    random_weights,
    small_graph_corpus,
)

SIX_CONSTRUCTORS = (
    (rep_co_subd4_2interval, 4),
    (rep_co_subd2_unit3interval, 2),
    (rep_co_subd2_3track, 2),
    (rep_co_subd2_unit4track, 2),
    (rep_co_subd2_unit2circular_interval, 2),
    (rep_co_subd2_2circular_track, 2),
)


def _run(number, name, budget, worker, acceptance_report):
    """Run one criterion, always emit its verdict line, then assert."""
    failures: list[str] = []
    started = time.monotonic()
    try:
        worker(failures)
    except Exception as exc:  # deliberate: the verdict line must still appear
        failures.append(f"crashed: {exc!r}")
    elapsed = time.monotonic() - started
    if budget is not None and elapsed >= budget:
        failures.append(f"took {elapsed:.1f}s, budget {budget}s")
    ok = acceptance_report(number, name, not failures)
    assert ok, failures[:8]


def test_acceptance_1_constructor_soundness(acceptance_report):
    def worker(failures):
        corpus = small_graph_corpus()
        if len(corpus) != 47:
            failures.append(f"corpus has {len(corpus)} graphs, expected 47")
        rng = random.Random(101)
        randoms = [random_original_graph(rng, n_min=2, n_max=7) for _ in range(100)]
        for pool, crosscheck in ((corpus, True), (randoms, False)):
            for g in pool:
                for build, arity in SIX_CONSTRUCTORS:
                    target = complement(subdivide(g, arity))
                    rep = build(g)
                    report = verify_representation(rep, target)
                    if not report.ok:
                        failures.append(
                            f"{build.__name__} on n={g.n} m={g.m}: "
                            f"{len(report.missing_edges)} missing, "
                            f"{len(report.extra_edges)} extra"
                        )
                    elif crosscheck and not oracle_realizes(rep, target):
                        failures.append(
                            f"{build.__name__} on n={g.n} m={g.m}: oracle predicate disagrees"
                        )

    _run(1, "constructor-soundness", 60, worker, acceptance_report)


def test_acceptance_2_unit_length_exactness(acceptance_report):
    def worker(failures):
        print(
            "circumference policy: 6m^2+2m+4 whenever n <= m+1 (the integer grid); "
            "sparser graphs get the largest circumference the finer grid allows, "
            "6m^2+1 at corpus sizes"
        )
        for g in small_graph_corpus():
            mm = g.m * g.m
            for build in (
                rep_co_subd2_unit3interval,
                rep_co_subd2_unit4track,
                rep_co_subd2_unit2circular_interval,
            ):
                unit = is_unit(build(g))
                if unit != mm:
                    failures.append(f"{build.__name__} n={g.n} m={g.m}: unit {unit} != {mm}")
            rep = rep_co_subd2_unit2circular_interval(g)
            if g.n <= g.m + 1:
                want = 6 * mm + 2 * g.m + 4
            else:
                K = max(g.n - 1, 2 * g.m * (g.m + 2))
                want = 6 * mm + Fraction(2 * mm + 4 * g.m, K)
            if rep.circumferences != (want,):
                failures.append(
                    f"circumference n={g.n} m={g.m}: {rep.circumferences[0]} != {want}"
                )
        # the smallest dense case pins the closed form at 12
        single = small_graph_corpus()[0]
        if rep_co_subd2_unit2circular_interval(single).circumferences != (12,):
            failures.append("single-edge circumference is not 12")

    _run(2, "unit-length-exactness", None, worker, acceptance_report)


def test_acceptance_3_gadget_soundness(acceptance_report):
    def worker(failures):
        for w in range(1, 5):
            for l in range(1, 5):
                params = QParams(w, l)
                target = complement(build_q(params))
                rep2 = rep_co_q_unit2interval(params)
                report = verify_representation(rep2, target)
                if not report.ok:
                    failures.append(f"q-u2i w={w} l={l}: not realized")
                if is_unit(rep2) != 6 * params.spacing:
                    failures.append(f"q-u2i w={w} l={l}: unit != 6N")
                rep3 = rep_co_q_unit3track(params)
                report = verify_representation(rep3, target)
                if not report.ok:
                    failures.append(f"q-u3t w={w} l={l}: not realized")
                if is_unit(rep3) != 4 * params.spacing:
                    failures.append(f"q-u3t w={w} l={l}: unit != 4N")

    _run(3, "gadget-soundness", 120, worker, acceptance_report)


def test_acceptance_4_approximation_bounds(acceptance_report):
    def worker(failures):
        rng = random.Random(104)
        for trial in range(500):
            t = rng.randint(1, 3)
            n = rng.randint(2, 12)
            rep = random_representation(rng, Kind.INTERVAL, t, n)
            weights = random_weights(rng, rep.vertices, max_weight=10)
            g = intersection_graph(rep)
            opt = max_weight_clique_bruteforce(g, weights).weight
            scan = stab_weight_scan(rep, weights)[1]
            approx = approx_clique_t(rep, weights)
            if not (scan.weight <= opt <= 2 * t * scan.weight):
                failures.append(f"trial {trial}: scan {scan.weight} vs opt {opt} (t={t})")
            if not (approx.weight <= opt <= t * approx.weight):
                failures.append(f"trial {trial}: approx {approx.weight} vs opt {opt} (t={t})")
            if t == 1 and approx.weight != opt:
                failures.append(f"trial {trial}: t=1 approx {approx.weight} != opt {opt}")
            if not is_clique(g, scan.members) or not is_clique(g, approx.members):
                failures.append(f"trial {trial}: non-clique result")

    _run(4, "approximation-bounds", 120, worker, acceptance_report)


def test_acceptance_5_two_track_exactness(acceptance_report):
    def worker(failures):
        rng = random.Random(105)
        for trial in range(200):
            n = rng.randint(2, 12)
            rep = random_representation(rng, Kind.TRACK, 2, n)
            weights = random_weights(rng, rep.vertices, max_weight=10)
            g = intersection_graph(rep)
            opt = max_weight_clique_bruteforce(g, weights).weight
            res = exact_clique_2track(rep, weights)
            if res.weight != opt:
                failures.append(f"trial {trial}: {res.weight} != opt {opt}")
            if not is_clique(g, res.members):
                failures.append(f"trial {trial}: non-clique result")

    _run(5, "two-track-exactness", None, worker, acceptance_report)


def test_acceptance_6_cobipartite_solver(acceptance_report):
    def worker(failures):
        rng = random.Random(106)
        for trial in range(200):
            g, partition = random_cobipartite_instance(rng, n_min=2, n_max=14)
            weights = random_weights(rng, g.vertices, max_weight=10)
            opt = max_weight_clique_bruteforce(g, weights).weight
            res = max_weight_clique_cobipartite(g, partition, weights)
            if res.weight != opt:
                failures.append(f"trial {trial}: {res.weight} != opt {opt}")
            if not is_clique(g, res.members):
                failures.append(f"trial {trial}: witness is not a clique")
            if sum(weights[v] for v in res.members) != res.weight:
                failures.append(f"trial {trial}: witness weight mismatch")

    _run(6, "cobipartite-solver", None, worker, acceptance_report)


def test_acceptance_7_subdivision_independence_shift(acceptance_report):
    def worker(failures):
        for g in small_graph_corpus():
            base_set, alpha = max_independent_set_bruteforce(g, oracle_limit=60)
            subd = subdivide(g, 2)
            subd_set, alpha_subd = max_independent_set_bruteforce(subd, oracle_limit=60)
            if alpha_subd != alpha + g.m:
                failures.append(
                    f"n={g.n} m={g.m}: alpha(subd2) {alpha_subd} != {alpha} + {g.m}"
                )
            if not is_independent_set(g, base_set) or len(base_set) != alpha:
                failures.append(f"n={g.n} m={g.m}: bad base witness")
            if not is_independent_set(subd, subd_set) or len(subd_set) != alpha_subd:
                failures.append(f"n={g.n} m={g.m}: bad subdivision witness")

    _run(7, "subdivision-independence-shift", None, worker, acceptance_report)


def test_acceptance_8_k5_fixture(acceptance_report):
    def worker(failures):
        rep = k5_unit_2circular_track()
        if not verify_representation(rep, complete_graph(5)).ok:
            failures.append("fixture does not realize K5")
        if not oracle_realizes(rep, complete_graph(5)):
            failures.append("oracle predicate disagrees on K5")
        if is_unit(rep) != 2:
            failures.append(f"fixture is not unit: {is_unit(rep)}")
        cycle_edges = []
        for site in (1, 2):
            one = Representation(
                Kind.CIRCULAR_INTERVAL,
                1,
                {
                    v: [Piece(p.lo, p.hi, 1) for p in rep.pieces[v] if p.site == site]
                    for v in rep.sorted_vertices
                },
                (rep.circumferences[site - 1],),
            )
            g = intersection_graph(one)
            degs = sorted(g.degree(v) for v in g.sorted_vertices)
            if g.m != 5 or degs != [2, 2, 2, 2, 2]:
                failures.append(f"circle {site} alone is not a 5-cycle")
            cycle_edges.append(g.edges)
        if cycle_edges[0] & cycle_edges[1]:
            failures.append("circles share an edge")
        if cycle_edges[0] | cycle_edges[1] != complete_graph(5).edges:
            failures.append("circle edges do not union to K5")

    _run(8, "k5-fixture", None, worker, acceptance_report)


def test_acceptance_9_cli_determinism(acceptance_report, tmp_path):
    def worker(failures):
        graph_path = tmp_path / "graph.json"
        graph_path.write_text(
            json.dumps(
                {
                    "vertices": ["x1", "x2", "x3", "x4"],
                    "edges": [["x1", "x2"], ["x3", "x4"]],
                }
            ),
            encoding="utf-8",
        )
        k5 = complete_graph(5)
        (tmp_path / "k5.json").write_text(json.dumps(graph_to_json_dict(k5)), encoding="utf-8")
        rep_path = tmp_path / "rep0.json"
        cli_main(["construct", "co-subd2-u4t", str(graph_path), "-o", str(rep_path)])
        track2 = random_representation(random.Random(9), Kind.TRACK, 2, 8)
        track2_path = tmp_path / "track2.json"
        track2_path.write_text(
            json.dumps(representation_to_json_dict(track2)), encoding="utf-8"
        )
        weights_path = tmp_path / "weights.json"
        rep_vertices = json.loads(rep_path.read_text())["pieces"]
        weights_path.write_text(
            json.dumps({name: 1 + (i % 3) for i, name in enumerate(sorted(rep_vertices))}),
            encoding="utf-8",
        )
        commands = [
            ["construct", "co-subd2-u2ci", str(graph_path)],  # fractional coordinates
            ["construct", "co-subd4-2i", str(graph_path)],
            ["construct", "q-u2i", "--w", "2", "--l", "2"],
            ["construct", "k5-u2ct"],
            ["clique", str(rep_path), "--algo", "scan", "--weights", str(weights_path)],
            ["clique", str(rep_path), "--algo", "t-approx"],
            ["clique", str(track2_path), "--algo", "2track-exact"],
            ["clique", str(tmp_path / "k5.json"), "--algo", "exact"],
            ["--seed", "9", "bench", "--instances", "5", "--n", "6", "--t", "2"],
            ["--seed", "9", "bench", "--instances", "3", "--n", "5", "--t", "3", "--kind", "track"],
            ["convert", str(graph_path), "--to", "dot"],
        ]
        for idx, argv in enumerate(commands):
            blobs = []
            for attempt in ("a", "b"):
                out = tmp_path / f"out{idx}{attempt}"
                rc = cli_main(argv + ["-o", str(out)])
                if rc != 0:
                    failures.append(f"command {idx} exited {rc}: {argv}")
                    break
                blobs.append(out.read_bytes())
            if len(blobs) == 2 and blobs[0] != blobs[1]:
                failures.append(f"command {idx} output differs between runs: {argv}")

    _run(9, "cli-determinism", None, worker, acceptance_report)
