from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.config.settings import settings
from app.exceptions import DimensionMismatchException, NotConnectedException, SizeLimitExceededException
from app.models.cobordism import CobordismWord, Generator, Layer, NormalForm, OpenComponent
from app.models.frobenius import FrobeniusAlgebra
from app.models.operator import LinearOperator
from app.schemas.common.report import CheckReport, CheckResult, ReportBuilder
from app.schemas.tqft.reports import CounterexampleReport
from app.services.algebra_service import algebra_service
from app.services.cobordism_service import cobordism_service
from app.services.frobenius_service import frobenius_service
from app.utils import linalg
from app.utils.fields import QQ_FIELD, BaseField, Scalar, ScalarLike
from app.utils.tracing import get_trace_logger

logger = get_trace_logger("tqft-service")


class TqftService:
    """The functor Z from cobordism words to exact linear operators"""

    # ===== OPERATORS =====

    def _operator(
        self, matrix: np.ndarray, in_width: int, out_width: int, frobenius: FrobeniusAlgebra
    ) -> LinearOperator:
        return LinearOperator(matrix, in_width, out_width, frobenius.dim, frobenius.field)

    def generator_matrix(self, generator: Generator, frobenius: FrobeniusAlgebra) -> np.ndarray:
        field = frobenius.field
        d = frobenius.dim
        if generator is Generator.ID:
            return linalg.identity(d, field)
        if generator is Generator.SWAP:
            swap = linalg.zeros((d * d, d * d), field)
            for i in range(d):
                for j in range(d):
                    swap[j * d + i, i * d + j] = field.one
            return swap
        if generator is Generator.CUP:
            return frobenius.algebra.unit.reshape(d, 1)
        if generator is Generator.CAP:
            return frobenius.mu.reshape(1, d)
        if generator is Generator.MUL:
            return frobenius.algebra.mult_matrix
        return frobenius.comul_matrix

    def elementary_operator(self, generator: Generator, frobenius: FrobeniusAlgebra) -> LinearOperator:
        """Cup = unit, Cap = mu, Mul = product, Comul = x -> sum_i x a_i (x) b_i, Id, Swap"""
        return self._operator(
            self.generator_matrix(generator, frobenius), generator.inputs, generator.outputs, frobenius
        )

    def compose(self, second: LinearOperator, first: LinearOperator) -> LinearOperator:
        """``second`` after ``first``"""
        if first.out_width != second.in_width or first.dim != second.dim:
            raise DimensionMismatchException("composition", first.out_width, second.in_width)
        return LinearOperator(
            linalg.dot(second.matrix, first.matrix, first.field),
            first.in_width,
            second.out_width,
            first.dim,
            first.field,
        )

    def tensor(self, left: LinearOperator, right: LinearOperator) -> LinearOperator:
        if left.dim != right.dim:
            raise DimensionMismatchException("tensor product", left.dim, right.dim)
        return LinearOperator(
            linalg.kron(left.matrix, right.matrix),
            left.in_width + right.in_width,
            left.out_width + right.out_width,
            left.dim,
            left.field,
        )

    def _check_size(self, dim: int, widths: Tuple[int, ...], in_width: int, size_cap: Optional[int]) -> None:
        cap = settings.SIZE_CAP if size_cap is None else size_cap
        entries = max(dim ** (w + in_width) for w in widths)
        if entries > cap:
            logger.warning(f"Refusing evaluation with {entries} entries (cap {cap})")
            raise SizeLimitExceededException(entries, cap)

    # ===== EVALUATION =====

    def _tensors(self, frobenius: FrobeniusAlgebra) -> Dict[Generator, np.ndarray]:
        d = frobenius.dim
        return {
            g: self.generator_matrix(g, frobenius).reshape((d,) * (g.outputs + g.inputs))
            for g in (Generator.CUP, Generator.CAP, Generator.MUL, Generator.COMUL)
        }

    def _apply_layer(self, state: np.ndarray, layer: Layer, tensors: Dict[Generator, np.ndarray]) -> np.ndarray:
        for g in layer:
            last = state.ndim - 1
            # produced strands go behind the ones already produced in this layer
            if g is Generator.ID:
                state = np.moveaxis(state, 0, last - 1)
                continue
            if g is Generator.SWAP:
                state = np.moveaxis(state, [1, 0], [last - 2, last - 1])
                continue
            k_in, k_out = g.inputs, g.outputs
            result = np.tensordot(tensors[g], state, axes=(list(range(k_out, k_out + k_in)), list(range(k_in))))
            last = result.ndim - 1
            state = np.moveaxis(result, list(range(k_out)), list(range(last - k_out, last)))
        return state

    def _from_state(
        self, state: np.ndarray, in_width: int, out_width: int, frobenius: FrobeniusAlgebra
    ) -> LinearOperator:
        d = frobenius.dim
        return self._operator(state.reshape(d**out_width, d**in_width), in_width, out_width, frobenius)

    def layer_states(
        self, word: CobordismWord, frobenius: FrobeniusAlgebra, size_cap: Optional[int] = None
    ) -> List[np.ndarray]:
        """
        State tensors of shape (d,) * strands + (d ** in_width,) before the first
        layer and after every layer. Identity and swap only permute axes; the
        other generators are contracted one at a time.

        Raises:
            SizeLimitExceededException: some intermediate state would need more entries than the cap
        """
        d = frobenius.dim
        self._check_size(d, word.state_widths(), word.in_width, size_cap)
        tensors = self._tensors(frobenius)
        columns = d**word.in_width
        states = [linalg.identity(columns, frobenius.field).reshape((d,) * word.in_width + (columns,))]
        for layer in word.layers:
            states.append(self._apply_layer(states[-1], layer, tensors))
        return states

    def evaluate_word(
        self, word: CobordismWord, frobenius: FrobeniusAlgebra, size_cap: Optional[int] = None
    ) -> LinearOperator:
        """
        Z(word), generator by generator.

        Raises:
            SizeLimitExceededException: some intermediate state would need more entries than the cap
        """
        states = self.layer_states(word, frobenius, size_cap)
        return self._from_state(states[-1], word.in_width, word.out_width, frobenius)

    def evaluate_rewrite(
        self,
        word: CobordismWord,
        states: Sequence[np.ndarray],
        rewritten: CobordismWord,
        frobenius: FrobeniusAlgebra,
        size_cap: Optional[int] = None,
    ) -> LinearOperator:
        """
        Z(rewritten), resuming from ``states`` (the ``layer_states`` of ``word``)
        after the leading layers both words share.
        """
        if rewritten.in_width != word.in_width:
            return self.evaluate_word(rewritten, frobenius, size_cap)
        self._check_size(frobenius.dim, rewritten.state_widths(), rewritten.in_width, size_cap)
        shared = 0
        limit = min(len(word.layers), len(rewritten.layers))
        while shared < limit and word.layers[shared] == rewritten.layers[shared]:
            shared += 1
        state = states[shared]
        tensors = self._tensors(frobenius)
        for layer in rewritten.layers[shared:]:
            state = self._apply_layer(state, layer, tensors)
        return self._from_state(state, rewritten.in_width, rewritten.out_width, frobenius)

    def _handle_power(self, frobenius: FrobeniusAlgebra, genus: int) -> np.ndarray:
        return algebra_service.power(frobenius.algebra, frobenius.handle, genus)

    def _component_matrix(self, frobenius: FrobeniusAlgebra, genus: int, inputs: int, outputs: int) -> np.ndarray:
        """Product of the inputs, times H^g, then coproduct onto the outputs"""
        field = frobenius.field
        identity = linalg.identity(frobenius.dim, field)
        mul = frobenius.algebra.mult_matrix
        comul = frobenius.comul_matrix

        if inputs == 0:
            gather = self.generator_matrix(Generator.CUP, frobenius)
        else:
            gather = identity
            for _ in range(inputs - 1):
                gather = linalg.dot(mul, linalg.kron(gather, identity), field)

        if outputs == 0:
            spread = self.generator_matrix(Generator.CAP, frobenius)
        else:
            spread = identity
            for _ in range(outputs - 1):
                spread = linalg.dot(linalg.kron(spread, identity), comul, field)

        handle = frobenius.algebra.left_matrix(self._handle_power(frobenius, genus))
        return linalg.dot(linalg.dot(spread, handle, field), gather, field)

    def evaluate_normal(
        self, normal_form: NormalForm, frobenius: FrobeniusAlgebra, size_cap: Optional[int] = None
    ) -> LinearOperator:
        """
        Z from the normal form alone: one gather/handle/spread operator per open
        component, tensored and permuted into the global leg order, times
        mu(H^g) for each closed component.
        """
        field = frobenius.field
        d = frobenius.dim
        n_in, n_out = normal_form.in_width, normal_form.out_width
        self._check_size(d, (n_out,), n_in, size_cap)

        matrix = linalg.identity(1, field)
        in_order: List[int] = []
        out_order: List[int] = []
        for component in normal_form.open_components:
            block = self._component_matrix(frobenius, component.genus, len(component.inputs), len(component.outputs))
            matrix = linalg.kron(matrix, block)
            in_order.extend(component.inputs)
            out_order.extend(component.outputs)

        tensor = matrix.reshape((d,) * (n_out + n_in))
        permutation = [out_order.index(j) for j in range(n_out)] + [n_out + in_order.index(i) for i in range(n_in)]
        matrix = np.transpose(tensor, permutation).reshape(d**n_out, d**n_in)

        for closed in normal_form.closed_components:
            matrix = matrix * self.closed_invariant(frobenius, closed.genus)
        return self._operator(matrix, n_in, n_out, frobenius)

    def closed_invariant(self, frobenius: FrobeniusAlgebra, genus: int) -> Scalar:
        """mu(H^g): the value of the closed genus-g surface"""
        return frobenius.counit(self._handle_power(frobenius, genus))

    def closed_invariants(self, frobenius: FrobeniusAlgebra, max_genus: int) -> List[Scalar]:
        return [self.closed_invariant(frobenius, g) for g in range(max_genus + 1)]

    # ===== CHECKS =====

    def frobenius_relation_check(self, frobenius: FrobeniusAlgebra) -> List[CheckResult]:
        """(m (x) 1)(1 (x) D) = D m = (1 (x) m)(D (x) 1)"""
        field = frobenius.field
        identity = linalg.identity(frobenius.dim, field)
        mul = frobenius.algebra.mult_matrix
        comul = frobenius.comul_matrix
        middle = linalg.dot(comul, mul, field)
        left = linalg.matmul(linalg.kron(mul, identity), linalg.kron(identity, comul), field)
        right = linalg.matmul(linalg.kron(identity, mul), linalg.kron(comul, identity), field)
        return [
            ReportBuilder.check("frobenius relation (left)", linalg.equal(left, middle)),
            ReportBuilder.check("frobenius relation (right)", linalg.equal(right, middle)),
        ]

    def _puncture_positions(self, word: CobordismWord) -> Dict[str, Tuple[int, int]]:
        """(boundary, strand) of the lowest strand at the first non-empty boundary and the highest at the last"""
        widths = word.boundary_widths()
        present = [b for b, w in enumerate(widths) if w]
        first, last = present[0], present[-1]
        return {"first": (first, 0), "last": (last, widths[last] - 1)}

    def puncture_word(self, word: CobordismWord, where: str) -> CobordismWord:
        """
        Add one input leg on the left and multiply it into the strand at the
        chosen position. Swap layers route the leg to that strand.
        """
        boundary, strand = self._puncture_positions(word)[where]
        widths = word.boundary_widths()
        total = widths[boundary] + 1
        layers = [(Generator.ID,) + layer for layer in word.layers[:boundary]]
        ids = Generator.ID
        for t in range(strand):
            layers.append((ids,) * t + (Generator.SWAP,) + (ids,) * (total - t - 2))
        layers.append((ids,) * strand + (Generator.MUL,) + (ids,) * (total - strand - 2))
        layers.extend(word.layers[boundary:])
        return cobordism_service.make_word(layers)

    def _feed(self, operator: LinearOperator, vector: np.ndarray, legs: int, frobenius: FrobeniusAlgebra) -> np.ndarray:
        """Z(M')(p (x) ... (x) p (x) x) as a matrix in x, the first ``legs`` inputs fed with p"""
        d = frobenius.dim
        rest = operator.in_width - legs
        tensor = operator.matrix.reshape((operator.rows,) + (d,) * legs + (d**rest,))
        for _ in range(legs):
            tensor = np.tensordot(tensor, vector, axes=([1], [0]))
        return tensor.reshape(operator.rows, d**rest)

    def _power(self, matrix: np.ndarray, k: int, field: BaseField) -> np.ndarray:
        result = linalg.identity(1, field)
        for _ in range(k):
            result = linalg.kron(result, matrix)
        return result

    def verify_direct_sum(
        self, left: FrobeniusAlgebra, right: FrobeniusAlgebra, word: CobordismWord, size_cap: Optional[int] = None
    ) -> CheckReport:
        """
        Check Z = Z_1 + Z_2 for F = F_1 (+) F_2, where Z_i(w) feeds the block
        idempotent p_i through an extra puncture.

        Raises:
            NotConnectedException: the word has more than one component
        """
        normal = cobordism_service.normal_form(word)
        if normal.component_count != 1:
            raise NotConnectedException(normal.component_count)
        total = frobenius_service.direct_sum(left, right)
        field = total.field
        d, d1 = total.dim, left.dim
        whole = self.evaluate_word(word, total, size_cap).matrix

        punctured = {
            "first": (self.puncture_word(word, "first"), 1),
            "last": (self.puncture_word(word, "last"), 1),
        }
        punctured["double"] = (self.puncture_word(punctured["first"][0], "last"), 2)
        evaluated = {name: self.evaluate_word(w, total, size_cap) for name, (w, _) in punctured.items()}

        report = ReportBuilder.report(f"direct sum: {cobordism_service.serialize_word(word)}")
        parts = []
        for index, block in enumerate((left, right), start=1):
            p = linalg.zeros((d,), field)
            embed = linalg.zeros((d, block.dim), field)
            offset = 0 if index == 1 else d1
            p[offset : offset + block.dim] = block.algebra.unit
            for k in range(block.dim):
                embed[offset + k, k] = field.one
            project = embed.T

            values = {name: self._feed(evaluated[name], p, legs, total) for name, (_, legs) in punctured.items()}
            z = values["first"]
            parts.append(z)

            action = total.algebra.left_matrix(p)
            invariant = linalg.equal(
                linalg.dot(z, self._power(action, word.in_width, field), field), z
            ) and linalg.equal(linalg.dot(self._power(action, word.out_width, field), z, field), z)
            direct = self.evaluate_word(word, block, size_cap).matrix
            embedded = linalg.dot(
                linalg.dot(self._power(embed, word.out_width, field), direct, field),
                self._power(project, word.in_width, field),
                field,
            )
            report.extend(
                [
                    ReportBuilder.check(f"Z_{index} is invariant under p_{index}", invariant),
                    ReportBuilder.check(f"Z_{index} equals the block evaluation", linalg.equal(z, embedded)),
                    ReportBuilder.check(
                        f"Z_{index} puncture position independent", linalg.equal(values["last"], z)
                    ),
                    ReportBuilder.check(f"Z_{index} double puncture", linalg.equal(values["double"], z)),
                ]
            )
        report.checks.insert(0, ReportBuilder.check("Z = Z_1 + Z_2", linalg.equal(parts[0] + parts[1], whole)))
        return report

    def simple_euler_check(
        self, lam: ScalarLike, word: CobordismWord, field: BaseField = QQ_FIELD
    ) -> CheckReport:
        """
        In S_lambda, check v^2 lambda^(m - n) = lambda^(-chi) per component and
        for the whole word, and v = lambda^(-chi/2) exactly for closed words.

        Raises:
            ZeroLambdaException: lambda = 0
        """
        simple = frobenius_service.build_simple(lam, field)
        value = field.convert(lam)
        whole = self.evaluate_word(word, simple).matrix[0, 0]
        chi = cobordism_service.euler_char(word)
        normal = cobordism_service.normal_form(word)

        report = ReportBuilder.report(f"euler formula, lambda = {field.format(value)}")
        product = field.one
        components: List[Tuple[int, int, int]] = [
            (c.genus, len(c.inputs), len(c.outputs)) for c in normal.open_components
        ] + [(c.genus, 0, 0) for c in normal.closed_components]
        for genus, m, n in components:
            v = self.evaluate_word(cobordism_service.connected_word(genus, m, n), simple).matrix[0, 0]
            product = product * v
            component_chi = 2 - 2 * genus - m - n
            lhs = v * v * field.power(value, m - n)
            report.checks.append(
                ReportBuilder.check(
                    f"component g={genus} m={m} n={n}: v^2 lambda^(m-n) = lambda^(-chi)",
                    lhs == field.power(value, -component_chi),
                    f"v = {field.format(v)}",
                )
            )
        lhs = whole * whole * field.power(value, word.in_width - word.out_width)
        report.checks.append(
            ReportBuilder.check(
                "word: v^2 lambda^(m-n) = lambda^(-chi)",
                lhs == field.power(value, -chi),
                f"v = {field.format(whole)}",
            )
        )
        report.checks.append(ReportBuilder.check("word value is the product of component values", whole == product))
        if word.in_width == 0 and word.out_width == 0:
            expected = field.power(value, -chi // 2)
            report.checks.append(
                ReportBuilder.check(
                    "closed: v = lambda^(-chi/2)", whole == expected, f"chi = {chi}, v = {field.format(whole)}"
                )
            )
        return report

    def counterexample(self, max_genus: Optional[int] = None, field: BaseField = QQ_FIELD) -> CounterexampleReport:
        """
        Q[x]/(x^4) with mu = coeff of x^3 against Q[x,y]/(x^2,y^2) with mu = coeff of xy:
        equal closed invariants, different nilpotency indices.
        """
        genus = settings.MAX_GENUS if max_genus is None else max_genus
        quartic = algebra_service.truncated_polynomial_algebra(field, [4])
        square = algebra_service.truncated_polynomial_algebra(field, [2, 2])
        left = frobenius_service.build_nilpotent(quartic, [0, 0, 0, 1])
        right = frobenius_service.build_nilpotent(square, [0, 0, 0, 1])
        return CounterexampleReport(
            max_genus=genus,
            left_invariants=[field.format(v) for v in self.closed_invariants(left, genus)],
            right_invariants=[field.format(v) for v in self.closed_invariants(right, genus)],
            left_index=algebra_service.nilpotency_index(quartic),
            right_index=algebra_service.nilpotency_index(square),
            left_socle_dim=algebra_service.socle(quartic).dim,
            right_socle_dim=algebra_service.socle(square).dim,
        )

    def component_operator(self, frobenius: FrobeniusAlgebra, component: OpenComponent) -> LinearOperator:
        """Operator of one open component on its own legs"""
        m, n = len(component.inputs), len(component.outputs)
        return self._operator(self._component_matrix(frobenius, component.genus, m, n), m, n, frobenius)


tqft_service = TqftService()
