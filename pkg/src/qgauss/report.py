"""Small report containers shared by the Gram-matrix builders and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class GramReport:
    """A computed Gram matrix next to its analytic target.

    matrix and target are lists of rows of floats (real parts; every Gram
    this library builds is real up to roundoff). max_abs_deviation is
    always recomputed from the stored entries rather than cached, so a
    report edited after the fact cannot misstate its own quality.
    """

    labels: list
    matrix: list
    target: list
    precision_digits: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def max_abs_deviation(self) -> float:
        worst = 0.0
        for row, trow in zip(self.matrix, self.target):
            for v, t in zip(row, trow):
                worst = max(worst, abs(v - t))
        return worst

    def deviation_matrix(self) -> list:
        return [[v - t for v, t in zip(row, trow)]
                for row, trow in zip(self.matrix, self.target)]

    def max_relative_deviation(self) -> float:
        """Deviations scaled by sqrt(|T_nn| |T_mm|), the natural size of an
        (n, m) entry when the diagonal grows or decays with the index.
        Entries whose scale vanishes fall back to the absolute deviation.
        """
        worst = 0.0
        for i, (row, trow) in enumerate(zip(self.matrix, self.target)):
            for j, (v, t) in enumerate(zip(row, trow)):
                scl = (abs(self.target[i][i]) * abs(self.target[j][j])) ** 0.5
                dev = abs(v - t)
                worst = max(worst, dev / scl if scl > 0 else dev)
        return worst

    def worst_entries(self, count: int = 3) -> list:
        """The count largest absolute deviations as (i, j, value, target)."""
        flat = [(abs(v - t), i, j, v, t)
                for i, (row, trow) in enumerate(zip(self.matrix, self.target))
                for j, (v, t) in enumerate(zip(row, trow))]
        flat.sort(key=lambda item: (-item[0], item[1], item[2]))
        return [(i, j, v, t) for _, i, j, v, t in flat[:count]]

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "matrix": [[float(v) for v in row] for row in self.matrix],
            "target": [[float(v) for v in row] for row in self.target],
            "max_abs_deviation": float(self.max_abs_deviation),
            "max_relative_deviation": float(self.max_relative_deviation()),
            "precision_digits": self.precision_digits,
            "notes": dict(self.notes),
        }
