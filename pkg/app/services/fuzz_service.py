from typing import List, Optional

from app.config.settings import settings
from app.exceptions import AppException
from app.models.cobordism import CobordismWord
from app.models.frobenius import FrobeniusAlgebra
from app.schemas.tqft.reports import FuzzFailure, FuzzReport
from app.services.cobordism_service import cobordism_service
from app.services.tqft_service import tqft_service
from app.utils import linalg
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("fuzz-service")


class FuzzService:
    """Seeded sweeps over random words; case i always uses seed + i"""

    def _words(self, seed: int, count: int, max_width: int, max_layers: int) -> List[CobordismWord]:
        return [cobordism_service.random_word(seed + i, max_width, max_layers) for i in range(count)]

    def cerf_fuzz(
        self,
        frobenius: FrobeniusAlgebra,
        seed: Optional[int] = None,
        count: Optional[int] = None,
        max_width: Optional[int] = None,
        max_layers: Optional[int] = None,
        size_cap: Optional[int] = None,
    ) -> FuzzReport:
        """
        Apply every applicable move to each random word and compare both the
        evaluation and the normal form with those of the unmoved word.
        """
        seed = settings.FUZZ_SEED if seed is None else seed
        count = settings.FUZZ_COUNT if count is None else count
        words = self._words(
            seed, count, max_width or settings.FUZZ_MAX_WIDTH, max_layers or settings.FUZZ_MAX_LAYERS
        )
        report = FuzzReport(title="cerf-fuzz", cases=count, with_moves=True)
        logger.info(f"Cerf fuzz: {count} words from seed {seed}")
        for case, word in enumerate(words):
            case_logger = logger.bind(case=case)
            text = cobordism_service.serialize_word(word)
            states = tqft_service.layer_states(word, frobenius, size_cap)
            expected = tqft_service.evaluate_rewrite(word, states, word, frobenius, size_cap).matrix
            normal = cobordism_service.normal_form(word)
            for move in cobordism_service.find_applicable_moves(word):
                report.moves += 1
                label = f"{move.kind.value}@{move.layer}:{move.offset}"
                try:
                    moved = cobordism_service.apply_cerf_move(word, move)
                    matrix = tqft_service.evaluate_rewrite(word, states, moved, frobenius, size_cap).matrix
                except AppException as exc:
                    report.failures.append(FuzzFailure(case=case, word=text, move=label, reason=exc.message))
                    continue
                if cobordism_service.normal_form(moved) != normal:
                    report.failures.append(FuzzFailure(case=case, word=text, move=label, reason="normal form changed"))
                elif not linalg.equal(matrix, expected):
                    report.failures.append(FuzzFailure(case=case, word=text, move=label, reason="operator changed"))
                else:
                    continue
                case_logger.warning(f"Move {label} broke invariance of {text}")
        logger.info(f"Cerf fuzz done: {report.moves} moves, {len(report.failures)} failures")
        return report

    def oracle_fuzz(
        self,
        frobenius: FrobeniusAlgebra,
        seed: Optional[int] = None,
        count: Optional[int] = None,
        max_width: Optional[int] = None,
        max_layers: Optional[int] = None,
        size_cap: Optional[int] = None,
    ) -> FuzzReport:
        """evaluate_word against evaluate_normal on each random word"""
        seed = settings.FUZZ_SEED if seed is None else seed
        count = settings.FUZZ_COUNT if count is None else count
        words = self._words(
            seed, count, max_width or settings.FUZZ_MAX_WIDTH, max_layers or settings.FUZZ_MAX_LAYERS
        )
        report = FuzzReport(title="oracle-fuzz", cases=count)
        logger.info(f"Oracle fuzz: {count} words from seed {seed}")
        for case, word in enumerate(words):
            direct = tqft_service.evaluate_word(word, frobenius, size_cap).matrix
            oracle = tqft_service.evaluate_normal(cobordism_service.normal_form(word), frobenius, size_cap).matrix
            if not linalg.equal(direct, oracle):
                text = cobordism_service.serialize_word(word)
                logger.bind(case=case).warning(f"Normal form evaluation disagrees on {text}")
                report.failures.append(FuzzFailure(case=case, word=text, reason="normal form evaluation differs"))
        logger.info(f"Oracle fuzz done: {len(report.failures)} failures")
        return report


fuzz_service = FuzzService()
