"""Verification suite: every combinatorial rule against the matrix oracle plus state-engine invariants."""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np
import pandas as pd

from config.settings import settings
from schemas.response_schemas import CheckResult, VerificationReport
from tools.axiom_validator import validate_axioms
from tools.bloch_state import (
    BlochState,
    InfoClassification,
    classify,
    convex_mix,
    information_total,
    max_information,
    random_ball_state,
    rebit_litmus,
    scaled,
)
from tools.correlation_structure import (
    all_parity_patterns,
    handedness_consistency,
    handedness_witness,
    parities_from_handedness,
)
from tools.entanglement import (
    EntanglementClass,
    composite_information,
    entanglement_class,
    tangles,
)
from tools.error_handler import GbitError
from tools.evolution import (
    bloch_action,
    evolve,
    random_landscape_generator,
    random_quantum_generator,
)
from tools.gf2_solver import (
    ParityConstraint,
    Satisfiable,
    bell_constraints,
    brute_force_check,
    evaluate,
    frustration_check,
)
from tools.interrogation import Interrogation, run_single_shot, shot_rng
from tools.pauli_oracle import (
    SITE_MATRICES,
    DensityMatrix,
    bloch_to_density,
    born_probability,
    commutes,
    density_to_bloch,
    lueders_update,
    matrix_of,
    prepare_from_answers,
    product_index,
    product_sign,
    random_density_matrix,
    random_pure_density,
    simultaneous_eigenbasis_exists,
    totally_mixed,
)
from tools.performance_monitor import performance_monitor
from tools.question_algebra import (
    ALWAYS_FALSE,
    ALWAYS_TRUE,
    GbitKind,
    QuestionIndex,
    SignedQuestion,
    SystemKind,
    compatible_extensions,
    enumerate_complete_set,
    extension_classes,
    is_compatible,
    is_complementary,
    is_mutually_compatible,
    logical_closure,
    mirror_sign,
    xnor_compose,
)
from tools.question_graph import build_lattice
from tools.tomography import run_tomography

logger = logging.getLogger(__name__)

Pair = Tuple[QuestionIndex, QuestionIndex]
CheckOutcome = Tuple[bool, int, str]

ROUND_TRIP_TOL = 1e-12
LUEDERS_TOL = 1e-10
ORTHOGONALITY_TOL = 1e-8
RANDOM_GF2_INSTANCES = 100
MAX_GF2_VARIABLES = 12
RANDOM_TRIPLES = 500
SAMPLED_OPERATORS = 200
TRANSCRIPT_STEPS = 6
SEED_RANGE = 1 << 32


@dataclass(frozen=True)
class VerificationCheck:
    name: str
    claim: str
    run: Callable[[SystemKind, np.random.Generator], CheckOutcome]
    applies: Callable[[SystemKind], bool] = lambda sys: True


def _exhaustive(sys: SystemKind) -> bool:
    return sys.n <= settings.exhaustive_max_n


def _pairs(sys: SystemKind, rng: np.random.Generator) -> Iterable[Pair]:
    """All ordered pairs at small n, otherwise a random sample."""
    members = enumerate_complete_set(sys).members
    if _exhaustive(sys):
        return itertools.product(members, repeat=2)
    picks = rng.integers(len(members), size=(settings.verify_random_pairs, 2))
    return [(members[i], members[j]) for i, j in picks]


def _sampled_questions(sys: SystemKind, rng: np.random.Generator) -> Sequence[QuestionIndex]:
    members = enumerate_complete_set(sys).members
    if _exhaustive(sys):
        return members
    return [members[i] for i in rng.integers(len(members), size=SAMPLED_OPERATORS)]


def _q(sys: SystemKind, label: str) -> QuestionIndex:
    """Question acting on the leading gbits, padded with zeros."""
    return QuestionIndex(tuple(int(c) for c in label) + (0,) * (sys.n - len(label)), sys.kind)


def _random_state(sys: SystemKind, rng: np.random.Generator) -> DensityMatrix:
    rank = int(rng.integers(1, sys.hilbert_dim + 1))
    return random_density_matrix(sys, rng, rank=rank)


def _report(failures: List[str], checked: int, ok_detail: str) -> CheckOutcome:
    if failures:
        return False, checked, f"{len(failures)} failures, first: {failures[0]}"
    return True, checked, ok_detail


# question algebra


def check_complete_set_count(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    qset = enumerate_complete_set(sys)
    expected = sys.dimension
    brute = sum(
        1
        for t in itertools.product(range(4), repeat=sys.n)
        if any(t) and (sys.kind is GbitKind.QUBIT or t.count(3) % 2 == 0)
    )
    ordered = list(qset.members) == sorted(set(qset.members))
    ok = len(qset) == expected == brute and ordered
    return ok, len(qset), f"D={len(qset)} (formula {expected}, brute force {brute})"


def check_compatibility_symmetry(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for a, b in _pairs(sys, rng):
        checked += 1
        if is_compatible(a, b) != is_compatible(b, a) or is_complementary(a, b) != is_complementary(b, a):
            failures.append(f"{a},{b}")
    return _report(failures, checked, "compatibility and complementarity are symmetric")


def check_compatibility_oracle(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for a, b in _pairs(sys, rng):
        checked += 1
        if is_compatible(a, b) != commutes(a, b):
            failures.append(f"{a},{b}")
    return _report(failures, checked, "is_compatible agrees with operator commutation")


def check_composition_oracle(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for a, b in _pairs(sys, rng):
        if not is_compatible(a, b):
            continue
        checked += 1
        result = xnor_compose(a, b)
        if a == b:
            if result != ALWAYS_TRUE or xnor_compose(a, SignedQuestion(a, -1)) != ALWAYS_FALSE:
                failures.append(f"{a} with itself")
            continue
        if result.index.indices != product_index(a, b) or result.sign != product_sign(a, b):
            failures.append(f"{a}<->{b} gave {result}")
    return _report(failures, checked, "XNOR index and sign agree with operator products")


def _compatible_triples(sys: SystemKind, rng: np.random.Generator) -> List[Tuple[QuestionIndex, ...]]:
    members = enumerate_complete_set(sys).members
    if _exhaustive(sys):
        neighbours = {q: {r for r in members if r > q and is_compatible(q, r)} for q in members}
        return [
            (a, b, c)
            for a in members
            for b in sorted(neighbours[a])
            for c in sorted(neighbours[a] & neighbours[b])
            if c > b
        ]
    triples = []
    for _ in range(settings.verify_random_pairs):
        triple = tuple(members[i] for i in rng.integers(len(members), size=3))
        if len(set(triple)) == 3 and is_mutually_compatible(triple):
            triples.append(triple)
    return triples


def check_associativity(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for a, b, c in _compatible_triples(sys, rng):
        signs = rng.choice((-1, 1), size=3)
        s1, s2, s3 = (SignedQuestion(q, int(s)) for q, s in zip((a, b, c), signs))
        left = xnor_compose(s1, s2)
        right = xnor_compose(s2, s3)
        left = left if not isinstance(left, SignedQuestion) else xnor_compose(left, s3)
        right = right if not isinstance(right, SignedQuestion) else xnor_compose(s1, right)
        checked += 1
        if left != right:
            failures.append(f"({s1},{s2},{s3})")
    return _report(failures, checked, "composition is associative on mutually compatible triples")


def check_rebit_parity(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for a, b in _pairs(sys, rng):
        if a == b or not is_compatible(a, b):
            continue
        checked += 1
        result = xnor_compose(a, b)
        if result.index.indices.count(3) % 2:
            failures.append(f"{a}<->{b}")
    return _report(failures, checked, "rebit compositions keep an even number of 3s")


def check_operator_structure(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures, checked = [], 0
    for q in _sampled_questions(sys, rng):
        rep = matrix_of(q, sys)
        checked += 1
        if not (rep.is_involutory and rep.is_hermitian and np.trace(rep.matrix) == 0):
            failures.append(str(q))
        elif sys.kind is GbitKind.REBIT and not rep.is_real_symmetric:
            failures.append(f"{q} not real symmetric")
    return _report(failures, checked, "operators are Hermitian, traceless involutions")


def check_bell_relation(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    odd = xnor_compose(_q(sys, "11"), _q(sys, "22"))
    even = xnor_compose(_q(sys, "12"), _q(sys, "21"))
    ok = odd == SignedQuestion(_q(sys, "33"), -1) and even == SignedQuestion(_q(sys, "33"), 1)
    return ok, 2, f"Q11<->Q22 = {odd}, Q12<->Q21 = {even}"


def _partial_transpose(q: QuestionIndex, flipped: Iterable[int]) -> np.ndarray:
    flipped = set(flipped)
    sites = SITE_MATRICES[q.kind]
    factors = [sites[mu].T if a in flipped else sites[mu] for a, mu in enumerate(q.indices)]
    out = factors[0]
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def check_mirror_structure(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    flipped = {1}
    failures, checked = [], 0
    for q in _sampled_questions(sys, rng):
        checked += 1
        if not np.array_equal(_partial_transpose(q, flipped), mirror_sign(q, flipped) * matrix_of(q).matrix):
            failures.append(str(q))

    def mirrored(a: QuestionIndex, b: QuestionIndex) -> int:
        result = xnor_compose(a, b)
        return result.sign * mirror_sign(a, flipped) * mirror_sign(b, flipped) * mirror_sign(result.index, flipped)

    if mirrored(_q(sys, "11"), _q(sys, "22")) != 1 or mirrored(_q(sys, "12"), _q(sys, "21")) != -1:
        failures.append("mirroring gbit B does not swap odd and even Bell correlations")
    return _report(failures, checked + 2, "mirror signs match the partial transpose and swap odd/even")


def check_lattice(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    graph = build_lattice(sys)
    expected = {
        GbitKind.QUBIT: (15, 45, 15, (3, 6, 8)),
        GbitKind.REBIT: (9, 18, 6, (2, 4, 4)),
    }[sys.kind]
    counts = (len(graph.vertices), len(graph.edges), len(graph.triangles))
    failures = []
    if counts != expected[:3]:
        failures.append(f"counts {counts}, expected {expected[:3]}")
    bad_degrees = [label for label, degrees in graph.degree_table().items() if degrees != expected[3]]
    if bad_degrees:
        failures.append(f"degrees off at {bad_degrees}")
    for t in graph.triangles:
        a, b, c = t.members
        sign = product_sign(a, b)
        if product_index(a, b) != c.indices or (sign < 0) != (t.parity.value == "odd"):
            failures.append(f"triangle {t.labels}")
    return _report(failures, counts[2], f"{counts[0]} vertices, {counts[1]} edges, {counts[2]} triangles")


def check_frustration(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    if frustration_check(bell_constraints(0)).satisfiable:
        failures.append("Bell instance with Q12<->Q21 = 0 is satisfiable")
    flipped = frustration_check(bell_constraints(1))
    if not isinstance(flipped, Satisfiable) or not evaluate(bell_constraints(1), flipped.witness):
        failures.append("Bell instance with Q12<->Q21 = 1 is not satisfied")
    for k in range(RANDOM_GF2_INSTANCES):
        n_vars = int(rng.integers(1, MAX_GF2_VARIABLES + 1))
        names = [f"x{j}" for j in range(n_vars)]
        constraints = []
        for _ in range(int(rng.integers(1, 2 * n_vars + 1))):
            size = int(rng.integers(1, n_vars + 1))
            chosen = tuple(rng.choice(names, size=size, replace=False))
            constraints.append(ParityConstraint(chosen, int(rng.integers(2))))
        result = frustration_check(constraints)
        if result.satisfiable != brute_force_check(constraints):
            failures.append(f"instance {k} disagrees with brute force")
        elif isinstance(result, Satisfiable) and not evaluate(constraints, result.witness):
            failures.append(f"instance {k} witness fails")
        elif not result.satisfiable and brute_force_check([constraints[i] for i in result.inconsistent]):
            failures.append(f"instance {k} culprit subset is satisfiable")
    return _report(failures, RANDOM_GF2_INSTANCES + 2, "GF(2) elimination agrees with exhaustive search")


def check_handedness(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    consistent = [p for p in all_parity_patterns((0, 1, 2)) if handedness_consistency(p)]
    if len(consistent) != 4:
        failures.append(f"{len(consistent)} consistent triple patterns")
    checked = 0
    for gbits in ((0, 1, 2), (0, 1, 2, 3)):
        for pattern in all_parity_patterns(gbits):
            checked += 1
            witness = handedness_witness(pattern)
            if (witness is not None) != handedness_consistency(pattern):
                failures.append(f"{pattern}")
            elif witness is not None and parities_from_handedness(witness) != pattern:
                failures.append(f"witness for {pattern}")
    return _report(failures, checked, "4 of 8 triple patterns consistent; witnesses reproduce parities")


def check_specker(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    members = enumerate_complete_set(sys).members
    failures = []
    for _ in range(RANDOM_TRIPLES):
        triple = [members[i] for i in rng.integers(len(members), size=3)]
        if is_mutually_compatible(triple) != simultaneous_eigenbasis_exists(triple):
            failures.append(",".join(q.label for q in triple))
    return _report(failures, RANDOM_TRIPLES, "pairwise compatibility matches joint diagonalizability")


# state engine


def check_bloch_round_trip(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    qset = enumerate_complete_set(sys)
    for k in range(settings.verify_random_states):
        rho = _random_state(sys, rng)
        state = density_to_bloch(rho)
        if np.max(np.abs(bloch_to_density(state).matrix - rho.matrix)) > ROUND_TRIP_TOL:
            failures.append(f"state {k} round trip")
        born = np.array([born_probability(rho, q) for q in qset])
        if np.max(np.abs(born - state.y_array)) > ROUND_TRIP_TOL:
            failures.append(f"state {k} Born probabilities")
    return _report(failures, settings.verify_random_states, "density <-> Bloch maps are mutually inverse")


def check_information_measure(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    target = max_information(sys)
    mixed = density_to_bloch(totally_mixed(sys))
    if information_total(mixed) != 0 or classify(mixed) is not InfoClassification.TOTALLY_MIXED:
        failures.append("state of no information")
    for k in range(settings.verify_random_states):
        rho = random_pure_density(sys, rng) if k % 2 == 0 else random_density_matrix(sys, rng)
        state = density_to_bloch(rho)
        info = information_total(state)
        purity = rho.purity
        if abs(purity - (1 + info) / sys.hilbert_dim) > LUEDERS_TOL:
            failures.append(f"purity bridge on state {k}")
        is_pure = classify(state) is InfoClassification.PURE
        if is_pure != (abs(purity - 1) <= settings.classify_tol):
            failures.append(f"classification of state {k}")
        if k % 2 == 0 and abs(info - target) > settings.classify_tol:
            failures.append(f"pure state {k} has I={info}")
    return _report(failures, settings.verify_random_states + 1, f"pure states carry {target:g} bits")


def check_mixing_and_homogeneity(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    for k in range(settings.verify_random_states):
        s1 = density_to_bloch(_random_state(sys, rng))
        s2 = density_to_bloch(_random_state(sys, rng))
        lam = float(rng.uniform(0.05, 0.95))
        mix = information_total(convex_mix(lam, s1, s2))
        if not mix < max(information_total(s1), information_total(s2)):
            failures.append(f"mixing pair {k}")
        shrunk = information_total(scaled(s1, lam))
        if abs(shrunk - lam * lam * information_total(s1)) > 1e-12 * max(1.0, information_total(s1)):
            failures.append(f"homogeneity on state {k}")
    return _report(failures, settings.verify_random_states, "mixing loses information; I(lam r) = lam^2 I(r)")


def check_conservation(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    for k in range(settings.verify_random_states):
        dt = float(rng.uniform(-2.0, 2.0))
        box = random_ball_state(sys, rng)
        rotated = evolve(box, random_landscape_generator(sys, rng), dt)
        if abs(information_total(rotated) - information_total(box)) >= settings.conservation_tol:
            failures.append(f"landscape sample {k}")
        state = density_to_bloch(_random_state(sys, rng))
        moved = evolve(state, random_quantum_generator(sys, rng), dt)
        if abs(information_total(moved) - information_total(state)) >= settings.conservation_tol:
            failures.append(f"quantum sample {k}")
    return _report(failures, 2 * settings.verify_random_states, "evolution conserves total information")


def check_group_law(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    samples = max(1, settings.verify_random_states // 5)
    for k in range(samples):
        t1, t2 = (float(t) for t in rng.uniform(-1.0, 1.0, size=2))
        for state, gen in (
            (random_ball_state(sys, rng), random_landscape_generator(sys, rng)),
            (density_to_bloch(_random_state(sys, rng)), random_quantum_generator(sys, rng)),
        ):
            stepwise = evolve(evolve(state, gen, t1), gen, t2)
            direct = evolve(state, gen, t1 + t2)
            if np.max(np.abs(stepwise.y_array - direct.y_array)) > settings.conservation_tol:
                failures.append(f"sample {k} ({type(gen).__name__})")
            if np.max(np.abs(evolve(state, gen, 0.0).y_array - state.y_array)) > settings.conservation_tol:
                failures.append(f"sample {k} dt=0")
    return _report(failures, 2 * samples, "evolve(t1) then evolve(t2) equals evolve(t1 + t2)")


def check_orthogonality(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    samples = max(1, settings.verify_random_states // 10)
    for k in range(samples):
        t = bloch_action(random_quantum_generator(sys, rng), float(rng.uniform(-2.0, 2.0)), sys)
        if np.max(np.abs(t.T @ t - np.eye(sys.dimension))) > ORTHOGONALITY_TOL:
            failures.append(f"sample {k}")
        if np.linalg.det(t) < 0:
            failures.append(f"sample {k} is not a rotation")
    return _report(failures, samples, "conjugation acts on Bloch vectors as a rotation")


def check_lueders(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    members = enumerate_complete_set(sys).members
    pairs = [(a, b) for a, b in itertools.permutations(members, 2) if is_compatible(a, b)]
    failures = []
    for k in range(settings.verify_random_states):
        rho = _random_state(sys, rng)
        q1 = members[rng.integers(len(members))]
        post = lueders_update(rho, q1, True) if born_probability(rho, q1) > LUEDERS_TOL else lueders_update(rho, q1, False)
        y = born_probability(post, q1)
        if not (abs(y - 1) <= LUEDERS_TOL or abs(y) <= LUEDERS_TOL):
            failures.append(f"repeatability on state {k}")
        if not pairs:
            continue
        a, b = pairs[rng.integers(len(pairs))]
        prior = born_probability(rho, b)
        averaged = 0.0
        for answer in (True, False):
            weight = born_probability(rho, a) if answer else 1 - born_probability(rho, a)
            if weight > LUEDERS_TOL:
                averaged += weight * born_probability(lueders_update(rho, a, answer), b)
        if abs(averaged - prior) > LUEDERS_TOL:
            failures.append(f"invariance of {b} under {a} on state {k}")
    return _report(failures, settings.verify_random_states, "Lueders updates repeat and leave compatible marginals")


def check_entanglement(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    bell = density_to_bloch(prepare_from_answers(sys, {_q(sys, "11"): True, _q(sys, "22"): True}))
    product = density_to_bloch(prepare_from_answers(sys, {_q(sys, "10"): True, _q(sys, "01"): True}))
    mixed = BlochState.no_information(sys)
    failures = []
    if entanglement_class(bell) is not EntanglementClass.ENTANGLED or abs(composite_information(bell, (0,)) - 3) > 1e-9:
        failures.append("Bell state")
    if entanglement_class(product) is not EntanglementClass.CLASSICALLY_COMPOSED or abs(composite_information(product, (0,)) - 1) > 1e-9:
        failures.append("product state")
    if entanglement_class(mixed) is not EntanglementClass.CLASSICALLY_COMPOSED:
        failures.append("totally mixed state")
    if sys.kind is GbitKind.REBIT:
        litmus = density_to_bloch(prepare_from_answers(sys, {_q(sys, "33"): True}))
        individuals = [litmus.probability(q) for q in enumerate_complete_set(sys) if q.weight == 1]
        if abs(rebit_litmus(litmus) - 1) > 1e-9 or np.max(np.abs(np.array(individuals) - 0.5)) > 1e-9:
            failures.append("rebit litmus")
    return _report(failures, 3, "Bell composite information is 3 bits; product states stay at 1")


def check_monogamy(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    failures = []
    known = [_q(sys, "110"), _q(sys, "220")]
    extensions = compatible_extensions(known, {2})
    if any(q.weight == 2 for q in extensions):
        failures.append("a bipartite question involving C is compatible with both")
    if sys.kind is GbitKind.QUBIT:
        expected = {_q(sys, f"{m}{m}{k}") for m in range(4) for k in (1, 2, 3)}
        if set(extensions) != expected:
            failures.append(f"extensions {[q.label for q in extensions]}")
        if set(extension_classes(known, {2})) != {_q(sys, f"00{k}") for k in (1, 2, 3)}:
            failures.append("extension classes are not the individuals of C")
    for k in range(settings.verify_random_states):
        t = tangles(density_to_bloch(_random_state(sys, rng)))
        if t.three_tangle < 0 or abs(t.monogamy_slack - t.three_tangle) > 1e-12:
            failures.append(f"tangles of state {k}")
    return _report(failures, settings.verify_random_states + 2, "tau_A|BC = tau_AB + tau_AC + three-tangle")


def check_ghz(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    gens = [_q(sys, "211"), _q(sys, "121"), _q(sys, "112")]
    failures = []
    if not (is_mutually_compatible(gens) and simultaneous_eigenbasis_exists(gens)):
        failures.append("generators are not mutually compatible")
    closure = logical_closure(gens)
    labels = {s.index.label for s in closure}
    if len(closure) != 7 or not {"330", "303", "033", "222"} <= labels:
        failures.append(f"closure {sorted(labels)}")
    rho = prepare_from_answers(sys, {q: True for q in gens})
    for s in closure:
        if abs(born_probability(rho, s.index) - (1.0 if s.sign > 0 else 0.0)) > 1e-12:
            failures.append(f"closure member {s} disagrees with the GHZ state")
    return _report(failures, len(closure), "GHZ generators close to 7 signed questions")


# interrogation


def _preset_answers(sys: SystemKind) -> dict:
    """Q_1 answered yes for one gbit, Bell for two, GHZ on the leading three otherwise."""
    if sys.n == 1:
        labels = ["1"]
    elif sys.n == 2:
        labels = ["11", "22"]
    else:
        labels = ["211", "121", "112"]
    return {_q(sys, label): True for label in labels}


def check_axioms(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    report = validate_axioms(sys, settings.verify_axiom_trials, int(rng.integers(SEED_RANGE)))
    failures = [f"{c.name} statistic {c.statistic:.3g} > {c.bound:.3g}" for c in report.checks if not c.passed]
    checked = sum(c.trials for c in report.checks)
    return _report(failures, checked, f"{len(report.checks)} axiom checks at {report.trials} trials")


def check_tomography(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    answers = _preset_answers(sys)
    report = run_tomography(
        prepare_from_answers(sys, answers), settings.verify_tomography_shots, seed=int(rng.integers(SEED_RANGE))
    )
    failures = [f"Q_{label} outside {report.band:.2g}" for label in report.flagged]
    by_label = {e.question: e for e in report.estimates}
    for q in answers:
        if by_label[q.label].y_hat != 1.0:
            failures.append(f"prepared answer Q_{q.label} estimated at {by_label[q.label].y_hat}")
    if report.estimated_state is None:
        failures.append("no state estimate from the complete set")
    return _report(failures, len(report.estimates), f"estimates within {settings.frequency_band:g}/sqrt(n)")


def check_transcripts(sys: SystemKind, rng: np.random.Generator) -> CheckOutcome:
    members = enumerate_complete_set(sys).members
    target = max_information(sys)
    samples = max(1, settings.verify_random_states // 5)
    failures = []
    for k in range(samples):
        script = [members[i] for i in rng.integers(len(members), size=TRANSCRIPT_STEPS)]
        script.append(script[-1])
        interrogation = Interrogation(sys, random_pure_density(sys, rng), tuple(script), int(rng.integers(SEED_RANGE)))
        record = run_single_shot(interrogation, run=k)
        worst = max(abs(e.post_state.information - target) for e in record.entries)
        if worst > settings.conservation_tol:
            failures.append(f"run {k} lost {worst:.3g} bits")
        if record.answers[-1] != record.answers[-2]:
            failures.append(f"run {k} repeated question changed its answer")
        if run_single_shot(interrogation, run=k) != record:
            failures.append(f"run {k} is not reproducible")
    return _report(failures, samples, "pure-state transcripts keep 2^n-1 bits, repeat answers and replay exactly")


def _state_sized(sys: SystemKind) -> bool:
    return sys.n <= settings.state_check_max_n


CHECKS: Tuple[VerificationCheck, ...] = (
    VerificationCheck("complete_set_count", "complete set has 4^n-1 (qubit) or 2^(n-1)(2^n+1)-1 (rebit) questions", check_complete_set_count),
    VerificationCheck("compatibility_symmetry", "compatibility and complementarity are symmetric relations", check_compatibility_symmetry),
    VerificationCheck("compatibility_oracle", "even index disagreement <=> Pauli strings commute", check_compatibility_oracle),
    VerificationCheck("composition_oracle", "XNOR composition index and parity equal the operator product", check_composition_oracle),
    VerificationCheck("associativity", "XNOR composition is associative on mutually compatible triples", check_associativity),
    VerificationCheck("rebit_parity", "rebit compositions preserve an even count of 3s", check_rebit_parity, lambda s: s.kind is GbitKind.REBIT),
    VerificationCheck("operator_structure", "question operators are Hermitian traceless involutions, real for rebits", check_operator_structure),
    VerificationCheck("bell_relation", "Q11<->Q22 = not Q33 and Q12<->Q21 = Q33", check_bell_relation, lambda s: s.n >= 2),
    VerificationCheck("mirror_structure", "mirror relabeling is the partial transpose and swaps odd/even", check_mirror_structure, lambda s: s.n >= 2 and s.kind is GbitKind.QUBIT),
    VerificationCheck("lattice", "two-gbit lattice triangle counts and vertex degrees", check_lattice, lambda s: s.n == 2),
    VerificationCheck("frustration", "Bell constraints over individuals are frustrated; GF(2) solver matches brute force", check_frustration),
    VerificationCheck("handedness", "exactly four of eight triple parity patterns are consistent", check_handedness),
    VerificationCheck("specker", "pairwise compatible questions are jointly diagonalizable", check_specker),
    VerificationCheck("bloch_round_trip", "rho = 2^-n (p I + sum r_i P_i) inverts r_i = tr(rho P_i)", check_bloch_round_trip, _state_sized),
    VerificationCheck("information_measure", "pure states carry 2^n-1 bits; classification matches purity", check_information_measure, _state_sized),
    VerificationCheck("mixing_homogeneity", "mixing strictly lowers the maximum information; I is quadratic", check_mixing_and_homogeneity, _state_sized),
    VerificationCheck("conservation", "landscape and quantum evolution conserve information", check_conservation, _state_sized),
    VerificationCheck("group_law", "evolution is a one-parameter group", check_group_law, _state_sized),
    VerificationCheck("orthogonality", "unitary conjugation induces an SO(D) rotation of Bloch vectors", check_orthogonality, _state_sized),
    VerificationCheck("lueders", "answers repeat; compatible marginals are invariant on average", check_lueders, _state_sized),
    VerificationCheck("entanglement", "Bell states are entangled, product states classically composed", check_entanglement, lambda s: s.n == 2),
    VerificationCheck("monogamy", "no bipartite question with C is compatible with Q110 and Q220; tangle slack is the three-tangle", check_monogamy, lambda s: s.n == 3),
    VerificationCheck("ghz", "GHZ generators are mutually compatible with a seven-member closure", check_ghz, lambda s: s.n == 3),
    VerificationCheck("axioms", "repeatability, compatible invariance, Specker, erasure and conservation hold within 3 sigma", check_axioms, _state_sized),
    VerificationCheck("tomography", "preset tomography converges within 5/sqrt(n) of the Born values", check_tomography, _state_sized),
    VerificationCheck("transcripts", "single-shot transcripts on pure states conserve information", check_transcripts, _state_sized),
)


def _run_check(check: VerificationCheck, sys: SystemKind, rng: np.random.Generator) -> CheckResult:
    timed = performance_monitor(f"verify.{check.name}")(check.run)
    try:
        passed, checked, detail = timed(sys, rng)
    except GbitError as exc:
        passed, checked, detail = False, 0, f"{exc.error_category}: {exc.message}"
    level = logging.INFO if passed else logging.WARNING
    logger.log(level, "check %-24s %s (%d checked)", check.name, "pass" if passed else "FAIL", checked)
    return CheckResult(name=check.name, claim=check.claim, passed=bool(passed), checked=checked, detail=detail)


def run_verification(sys: SystemKind, seed: int) -> VerificationReport:
    """Run every applicable check; check k draws from RNG stream k of the seed."""
    results: List[CheckResult] = []
    skipped = 0
    for k, check in enumerate(CHECKS):
        if not check.applies(sys):
            skipped += 1
            continue
        results.append(_run_check(check, sys, shot_rng(seed, k)))
    passed = sum(r.passed for r in results)
    return VerificationReport(
        kind=sys.kind.value,
        n=sys.n,
        seed=seed,
        checks=results,
        summary={"passed": passed, "failed": len(results) - passed, "skipped": skipped},
    )


def render_verification_table(reports: Sequence[VerificationReport]) -> str:
    rows = [
        {
            "system": f"{r.kind} n={r.n}",
            "check": c.name,
            "result": "PASS" if c.passed else "FAIL",
            "checked": c.checked,
            "claim": c.claim,
        }
        for r in reports
        for c in r.checks
    ]
    frame = pd.DataFrame(rows, columns=["system", "check", "result", "checked", "claim"])
    lines = [frame.to_string(index=False)]
    for r in reports:
        s = r.summary
        lines.append(f"{r.kind} n={r.n}: {s['passed']} passed, {s['failed']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


__all__ = ["CHECKS", "VerificationCheck", "render_verification_table", "run_verification"]
