"""
Seeded end-to-end sweeps over the shipped algebras and random direct sums.

The 1000-word and 100-algebra sweeps are marked slow; scripts/run_tests.py
only includes them with --slow.
"""
import random
from fractions import Fraction

import pytest

from app.config.constants import SUMCHECK_WORDS
from app.exceptions import DegeneratePairingException
from app.services.algebra_service import algebra_service
from app.services.cobordism_service import cobordism_service
from app.services.decomposition_service import decomposition_service
from app.services.frobenius_service import frobenius_service
from app.services.fuzz_service import fuzz_service
from app.services.tqft_service import tqft_service
from app.utils import linalg
from app.utils.fields import QQ_FIELD
from tests.utils.test_helpers import random_direct_sum, signature_of, truncated

NILPOTENT = ("n2", "qx4", "qxy")


@pytest.mark.integration
class TestAxiomSuite:
    """Test the Frobenius axioms on shipped and random algebras"""

    def test_shipped(self, shipped):
        for name, frobenius in shipped.items():
            assert frobenius_service.verify_axioms(frobenius).passed, name

    @pytest.mark.slow
    def test_random(self):
        for seed in range(100):
            frobenius, _ = random_direct_sum(seed, max_summands=3, max_dim=5)
            report = frobenius_service.verify_axioms(frobenius)
            assert report.passed, f"seed {seed}: {report.render()}"

    @pytest.mark.slow
    def test_random_functionals(self):
        """Test random mu on random algebras; degenerate pairings are skipped"""
        rng = random.Random(7)
        accepted, seed = 0, 0
        while accepted < 100:
            algebra = random_direct_sum(seed, max_summands=3, max_dim=5)[0].algebra
            seed += 1
            mu = [rng.randint(-3, 3) for _ in range(algebra.dim)]
            try:
                frobenius = frobenius_service.attach_functional(algebra, mu)
            except DegeneratePairingException:
                continue
            report = frobenius_service.verify_axioms(frobenius)
            assert report.passed, f"seed {seed - 1}, mu {mu}: {report.render()}"
            accepted += 1


@pytest.mark.integration
class TestClosedInvariantsAndHandle:
    """Test closed invariants and the handle element of nilpotent theories"""

    def test_low_genus(self, shipped):
        for frobenius in shipped.values():
            assert tqft_service.closed_invariant(frobenius, 0) == frobenius.counit(frobenius.algebra.unit)
            assert tqft_service.closed_invariant(frobenius, 1) == frobenius.dim

    def test_nilpotent_vanish_from_genus_two(self, shipped):
        for name in NILPOTENT:
            values = tqft_service.closed_invariants(shipped[name], 6)
            assert all(v == 0 for v in values[2:]), name

    def test_handle_is_multiple_of_socle(self, shipped):
        for name in NILPOTENT:
            frobenius = shipped[name]
            s = frobenius_service.socle_generator(frobenius)
            assert linalg.equal(frobenius.handle, s * frobenius.dim)
            _, adapted = algebra_service.ideal_chain(frobenius.algebra)
            for a, b in zip(adapted, frobenius_service.dual_basis_of(frobenius, adapted)):
                assert linalg.equal(frobenius.algebra.product(a, b), s)


@pytest.mark.integration
class TestEulerFormula:
    """Test Z(M) = lambda^(-chi/2) in S_lambda"""

    @pytest.mark.parametrize("lam", [Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-1)])
    def test_closed(self, lam):
        simple = frobenius_service.build_simple(lam)
        for genus in range(5):
            word = cobordism_service.closed_surface_word(genus)
            value = tqft_service.evaluate_word(word, simple).matrix[0, 0]
            assert value == QQ_FIELD.power(lam, genus - 1)

    def test_open(self):
        rng = random.Random(0)
        for seed in range(50):
            lam = rng.choice([Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-1)])
            report = tqft_service.simple_euler_check(lam, cobordism_service.random_word(seed, 4, 6))
            assert report.passed, f"seed {seed}: {report.render()}"


@pytest.mark.integration
class TestDecompositionRoundTrip:
    """Test decompose on random direct sums under a change of basis"""

    @pytest.mark.slow
    def test_sweep(self):
        for seed in range(100):
            frobenius, expected = random_direct_sum(seed)
            result = decomposition_service.decompose(frobenius)
            found = sorted(signature_of(s.classification, s.component.dim) for s in result.summands)
            assert found == expected, f"seed {seed}"


@pytest.mark.integration
class TestSweeps:
    """Test Cerf invariance and the normal-form oracle on 1000 seeded words"""

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["s2", "n2", "sum13"])
    def test_cerf_invariance(self, shipped, name):
        report = fuzz_service.cerf_fuzz(shipped[name], seed=0, count=1000, max_width=4, max_layers=6)
        assert report.passed, report.render()

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["s2", "n2", "sum13"])
    def test_oracle(self, shipped, name):
        report = fuzz_service.oracle_fuzz(shipped[name], seed=0, count=1000, max_width=4, max_layers=6)
        assert report.passed, report.render()


@pytest.mark.integration
class TestDirectSumEvaluation:
    """Test Z = Z_1 + Z_2 on the standard word set"""

    @pytest.mark.parametrize(
        "pair",
        [
            (lambda: frobenius_service.build_simple(1), lambda: frobenius_service.build_simple(3)),
            (lambda: frobenius_service.build_simple(1), lambda: truncated([2])),
            (lambda: truncated([2]), lambda: truncated([2])),
        ],
    )
    def test_pairs(self, pair):
        left, right = pair[0](), pair[1]()
        for text in SUMCHECK_WORDS:
            report = tqft_service.verify_direct_sum(left, right, cobordism_service.parse_word(text))
            assert report.passed, report.render()


@pytest.mark.integration
class TestCounterexampleAndPositivity:
    """Test the closed-invariant counterexample and Gram positivity"""

    def test_counterexample(self, qx4, qxy):
        expected = [0, 4, 0, 0, 0, 0, 0]
        assert tqft_service.closed_invariants(qx4, 6) == expected
        assert tqft_service.closed_invariants(qxy, 6) == expected
        assert algebra_service.nilpotency_index(qx4.algebra) == 4
        assert algebra_service.nilpotency_index(qxy.algebra) == 3

    def test_positivity(self, shipped):
        for lam in (1, 2, Fraction(1, 2)):
            assert frobenius_service.check_positive_definite(frobenius_service.build_simple(lam))
        assert not frobenius_service.check_positive_definite(frobenius_service.build_simple(-1))
        for name in NILPOTENT:
            assert not frobenius_service.check_positive_definite(shipped[name])
        assert not frobenius_service.check_positive_definite(truncated([3]))
