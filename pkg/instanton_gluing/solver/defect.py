"""Coordenadas transversales al estrato de rango uno.

Cerca de una matriz de rango uno F, el bloque 2×2 Ũᵀ·F·Ṽ, con Ũ y Ṽ
bases ortonormales de los complementos de los vectores singulares
superiores, se anula exactamente cuando F tiene rango ≤ 1 (mientras σ₁
no se acerque a cero). La orientación inducida en R⁴ no depende de la
elección de bases dentro de los complementos ni del signo de los
vectores singulares.
"""

from dataclasses import dataclass

import numpy as np

from instanton_gluing.geometry.linalg3 import as_mat3, svd


def complement_basis(axis: np.ndarray) -> np.ndarray:
    """Base ortonormal (3×2) del complemento de un vector unitario.

    Gram–Schmidt contra el eje de referencia menos alineado con axis
    (el primero en caso de empate), completado con un producto vectorial.
    """
    reference = np.zeros(3)
    reference[int(np.argmin(np.abs(axis)))] = 1.0
    first = reference - (reference @ axis) * axis
    first /= np.linalg.norm(first)
    second = np.cross(axis, first)
    return np.column_stack([first, second])


@dataclass(frozen=True, eq=False)
class DefectChart:
    """Carta del defecto de rango uno anclada en una matriz base.

    Atributos:
        u_perp: Complemento del vector singular izquierdo superior (3×2)
        v_perp: Complemento del vector singular derecho superior (3×2)
        base_sigma1: σ₁ de la matriz base
    """

    u_perp: np.ndarray
    v_perp: np.ndarray
    base_sigma1: float

    @classmethod
    def at(cls, base) -> "DefectChart":
        """Construye la carta en la matriz base."""
        factors = svd(as_mat3(base))
        return cls(
            u_perp=complement_basis(factors.u[:, 0]),
            v_perp=complement_basis(factors.v[:, 0]),
            base_sigma1=float(factors.sigma[0]),
        )

    def evaluate(self, matrix) -> np.ndarray:
        """Los cuatro números del bloque Ũᵀ·F·Ṽ."""
        return (self.u_perp.T @ np.asarray(matrix, dtype=float) @ self.v_perp).ravel()


def relative_defect(matrix) -> float:
    """σ₂/σ₁ de la matriz (0 para la matriz nula)."""
    sigma = svd(matrix).sigma
    return float(sigma[1] / sigma[0]) if sigma[0] > 0 else 0.0
