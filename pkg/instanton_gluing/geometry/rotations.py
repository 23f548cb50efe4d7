"""Cuaterniones, SO(3) y el recubrimiento doble ρ.

Los cuaterniones se representan como arrays de numpy de forma (..., 4)
con orden (w, x, y, z): w es la parte real y x, y, z las componentes
i, j, k. Las operaciones vectorizadas aceptan cualquier número de ejes
iniciales.
"""

from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

from instanton_gluing.core.exceptions import PreconditionError, RotationError
from instanton_gluing.utils import translations as t

UNIT_TOL = 1e-9
INVERSE_TOL = 1e-6
_SIGN_TIE = 1e-12


def quat(w: float, x: float = 0.0, y: float = 0.0, z: float = 0.0) -> np.ndarray:
    """Construye el cuaternión w + x·i + y·j + z·k."""
    return np.array([w, x, y, z], dtype=float)


def quat_mul(a, b) -> np.ndarray:
    """Producto de Hamilton con la convención i·j = k.

    Args:
        a: Cuaterniones de forma (..., 4)
        b: Cuaterniones de forma (..., 4), compatibles por broadcasting

    Returns:
        Producto a·b de forma (..., 4)
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )


def quat_conj(q) -> np.ndarray:
    """Conjugado: niega las partes i, j, k."""
    q = np.array(q, dtype=float)
    q[..., 1:] = -q[..., 1:]
    return q


def quat_normalize(q) -> np.ndarray:
    """Normaliza a norma unidad a lo largo del último eje."""
    q = np.asarray(q, dtype=float)
    return q / np.linalg.norm(q, axis=-1, keepdims=True)


def quat_exp(v) -> np.ndarray:
    """Exponencial de un cuaternión puro v: cos|v| + sin|v|·v/|v|."""
    v = np.asarray(v, dtype=float)
    theta = np.linalg.norm(v)
    if theta == 0.0:
        return quat(1.0)
    return np.concatenate([[np.cos(theta)], np.sin(theta) * v / theta])


def canonical_sign(q) -> np.ndarray:
    """Elige el representante de ±q con parte real no negativa.

    Los empates se resuelven por la componente i, luego j, luego k.
    """
    q = np.asarray(q, dtype=float)
    for component in q:
        if abs(component) > _SIGN_TIE:
            return q if component > 0 else -q
    return q


def rho_matrix(g) -> np.ndarray:
    """Versión vectorizada de ρ sobre cuaterniones de forma (..., 4).

    Normaliza la entrada y devuelve matrices de forma (..., 3, 3) cuyas
    columnas son g·i·g⁻¹, g·j·g⁻¹ y g·k·g⁻¹.
    """
    w, x, y, z = np.moveaxis(quat_normalize(g), -1, 0)
    rows = [
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ]
    return np.stack([np.stack(row, axis=-1) for row in rows], axis=-2)


@dataclass(frozen=True, eq=False)
class Rotation:
    """Elemento de SO(3).

    El constructor solo comprueba la forma; usa from_matrix para validar
    ortogonalidad y determinante.
    """

    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.asarray(self.matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise PreconditionError(t.LINALG_ERROR_SHAPE.format(shape=matrix.shape))
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def from_matrix(cls, m, tol: float = UNIT_TOL) -> "Rotation":
        """Crea una rotación validando las invariantes de SO(3).

        Args:
            m: Matriz 3×3
            tol: Tolerancia entrada a entrada para RᵀR = I y det R = 1

        Returns:
            Rotation validada

        Raises:
            RotationError: Si m no es una rotación dentro de la tolerancia
        """
        m = np.asarray(m, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise RotationError(t.ROTATION_ERROR_INVALID.format(deviation=np.inf))
        deviation = max(
            float(np.max(np.abs(m.T @ m - np.eye(3)))), abs(float(np.linalg.det(m)) - 1.0)
        )
        if deviation > tol:
            raise RotationError(t.ROTATION_ERROR_INVALID.format(deviation=deviation))
        return cls(m)

    @classmethod
    def identity(cls) -> "Rotation":
        """Rotación identidad."""
        return cls(np.eye(3))

    def inverse(self) -> "Rotation":
        """Rotación inversa (la traspuesta)."""
        return Rotation(self.matrix.T.copy())

    @property
    def angle(self) -> float:
        """Ángulo de giro en [0, π]."""
        return rotation_distance(Rotation.identity(), self)

    def __matmul__(self, other: Union["Rotation", np.ndarray]):
        if isinstance(other, Rotation):
            return Rotation(self.matrix @ other.matrix)
        return self.matrix @ np.asarray(other, dtype=float)

    def __rmatmul__(self, other):
        return np.asarray(other, dtype=float) @ self.matrix

    def __repr__(self) -> str:
        return f"Rotation({np.array2string(self.matrix, precision=6)})"


def rho(g) -> Rotation:
    """Recubrimiento doble ρ: cuaterniones unitarios → SO(3).

    Args:
        g: Cuaternión con norma 1 dentro de 1e-9 (se renormaliza)

    Returns:
        Rotation cuyas columnas son los conjugados de i, j, k por g

    Raises:
        PreconditionError: Si la norma de g se aleja de 1 más de 1e-9
    """
    g = np.asarray(g, dtype=float)
    norm = float(np.linalg.norm(g))
    if g.shape != (4,) or not abs(norm - 1.0) <= UNIT_TOL:
        raise PreconditionError(t.ROTATION_ERROR_NOT_UNIT.format(norm=norm))
    return Rotation(rho_matrix(g))


def rho_inverse_pair(r: Union[Rotation, np.ndarray]) -> Tuple[np.ndarray, np.ndarray]:
    """Devuelve las dos preimágenes ±g de una rotación.

    Usa el método de Shepperd (pivote en la mayor entre la traza y la
    diagonal). El primer elemento tiene el signo canónico de
    canonical_sign.

    Args:
        r: Rotación o matriz 3×3

    Returns:
        Tupla (g, -g) con ρ(g) = r

    Raises:
        RotationError: Si r no es una rotación dentro de 1e-6
    """
    matrix = r.matrix if isinstance(r, Rotation) else r
    m = Rotation.from_matrix(matrix, tol=INVERSE_TOL).matrix

    trace = m[0, 0] + m[1, 1] + m[2, 2]
    pivot = int(np.argmax([trace, m[0, 0], m[1, 1], m[2, 2]]))

    if pivot == 0:
        w = 0.5 * np.sqrt(max(1.0 + trace, 0.0))
        q = [w, (m[2, 1] - m[1, 2]) / (4 * w), (m[0, 2] - m[2, 0]) / (4 * w), (m[1, 0] - m[0, 1]) / (4 * w)]
    elif pivot == 1:
        x = 0.5 * np.sqrt(max(1.0 + m[0, 0] - m[1, 1] - m[2, 2], 0.0))
        q = [(m[2, 1] - m[1, 2]) / (4 * x), x, (m[0, 1] + m[1, 0]) / (4 * x), (m[0, 2] + m[2, 0]) / (4 * x)]
    elif pivot == 2:
        y = 0.5 * np.sqrt(max(1.0 - m[0, 0] + m[1, 1] - m[2, 2], 0.0))
        q = [(m[0, 2] - m[2, 0]) / (4 * y), (m[0, 1] + m[1, 0]) / (4 * y), y, (m[1, 2] + m[2, 1]) / (4 * y)]
    else:
        z = 0.5 * np.sqrt(max(1.0 - m[0, 0] - m[1, 1] + m[2, 2], 0.0))
        q = [(m[1, 0] - m[0, 1]) / (4 * z), (m[0, 2] + m[2, 0]) / (4 * z), (m[1, 2] + m[2, 1]) / (4 * z), z]

    g = canonical_sign(quat_normalize(np.array(q)))
    return g, -g


def rotation_distance(a: Rotation, b: Rotation) -> float:
    """Ángulo geodésico en [0, π] entre dos rotaciones."""
    rel = a.matrix.T @ b.matrix
    axial = np.array([rel[2, 1] - rel[1, 2], rel[0, 2] - rel[2, 0], rel[1, 0] - rel[0, 1]])
    cos_angle = 0.5 * (np.trace(rel) - 1.0)
    return float(np.arctan2(0.5 * np.linalg.norm(axial), cos_angle))


def rotation_from_vector(omega) -> Rotation:
    """Rotación de ángulo |ω| alrededor del eje ω/|ω|."""
    return Rotation(rho_matrix(quat_exp(0.5 * np.asarray(omega, dtype=float))))


def pi_rotation(n) -> Rotation:
    """Rotación de ángulo π alrededor del eje unitario n: 2nnᵀ − I."""
    n = np.asarray(n, dtype=float)
    n = n / np.linalg.norm(n)
    return Rotation(2.0 * np.outer(n, n) - np.eye(3))


def sample_unit_quaternion(rng: np.random.Generator, size=None) -> np.ndarray:
    """Cuaterniones unitarios uniformes (gaussiana 4D normalizada)."""
    shape = (4,) if size is None else tuple(np.atleast_1d(size)) + (4,)
    return quat_normalize(rng.standard_normal(shape))


def sample_rotation(rng: np.random.Generator) -> Rotation:
    """Rotación uniforme según la medida de Haar.

    Args:
        rng: Generador de numpy con semilla fijada por el llamador

    Returns:
        Rotation reproducible para un estado del generador dado
    """
    return Rotation(rho_matrix(sample_unit_quaternion(rng)))
