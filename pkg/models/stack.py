import numpy as np

from models.base import ArrayModel
from models.nnls import NnlsProblem


class SignVector(ArrayModel):
    """Quadrant signs of the intended symbols, +1/-1 per real coordinate."""

    b_r: np.ndarray
    b_i: np.ndarray

    @property
    def b(self) -> np.ndarray:
        return np.concatenate([self.b_r, self.b_i])


class RealStack(ArrayModel):
    """Real-valued, first-quadrant form of one precoding slot."""

    w_bar: np.ndarray  # 2N_t x 2N_r, [[Re W, -Im W], [Im W, Re W]]
    w_tilde: np.ndarray  # w_bar with column j scaled by b[j]
    s_bar: np.ndarray  # [Re s; Im s]
    s_tilde: np.ndarray  # s_bar * b, strictly positive
    gamma_bar: np.ndarray  # [Γ; Γ]
    signs: SignVector

    @property
    def n_r(self) -> int:
        return int(self.s_bar.shape[0] // 2)

    @property
    def n_t(self) -> int:
        return int(self.w_bar.shape[0] // 2)

    @property
    def target(self) -> np.ndarray:
        """d = -W̃(Γ̄∘s̃); minimising ‖W̃ũ - d‖ minimises ‖x̄‖."""
        return -self.w_tilde @ (self.gamma_bar * self.s_tilde)

    def problem(self) -> NnlsProblem:
        return NnlsProblem(a=self.w_tilde, d=self.target)

    def transmit_bar(self, u_tilde: np.ndarray) -> np.ndarray:
        """x̄ = W̃(Γ̄∘s̃ + ũ)."""
        return self.w_tilde @ (self.gamma_bar * self.s_tilde + u_tilde)
