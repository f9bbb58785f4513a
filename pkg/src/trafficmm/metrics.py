"""Classification metrics and repeat aggregation."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

METRIC_KEYS = ("accuracy", "macro_precision", "macro_recall", "macro_f1")


def confusion_matrix(y_true, y_pred, class_count: int) -> np.ndarray:
    """``cm[t, p]`` counts instances of true class ``t`` predicted as ``p``."""
    y_true = np.asarray(y_true, dtype=np.int64).reshape(-1)
    y_pred = np.asarray(y_pred, dtype=np.int64).reshape(-1)
    if y_true.shape != y_pred.shape:
        raise ValidationError(f"{y_true.size} labels vs {y_pred.size} predictions")
    if (y_true < 0).any():
        raise ValidationError("evaluation set contains unlabeled instances")
    if y_true.size and (max(y_true.max(), y_pred.max()) >= class_count or y_pred.min() < 0):
        raise ValidationError(f"class id outside [0, {class_count})")
    cm = np.zeros((class_count, class_count), dtype=np.int64)
    np.add.at(cm, (y_true, y_pred), 1)
    return cm


def _safe_div(num: np.ndarray, den: np.ndarray) -> np.ndarray:
    # 0/0 counts as 0
    out = np.zeros_like(num, dtype=np.float64)
    np.divide(num, den, out=out, where=den > 0)
    return out


@dataclass
class MetricsReport:
    accuracy: float
    macro_precision: float
    macro_recall: float
    macro_f1: float
    confusion: np.ndarray
    per_class: dict = field(default_factory=dict)

    @classmethod
    def from_confusion(cls, cm: np.ndarray) -> "MetricsReport":
        cm = np.asarray(cm, dtype=np.int64)
        tp = np.diag(cm).astype(np.float64)
        predicted = cm.sum(axis=0).astype(np.float64)
        actual = cm.sum(axis=1).astype(np.float64)
        precision = _safe_div(tp, predicted)
        recall = _safe_div(tp, actual)
        f1 = _safe_div(2 * precision * recall, precision + recall)
        total = cm.sum()
        return cls(
            accuracy=float(tp.sum() / total) if total else 0.0,
            macro_precision=float(precision.mean()),
            macro_recall=float(recall.mean()),
            macro_f1=float(f1.mean()),
            confusion=cm,
            per_class={"precision": precision.tolist(), "recall": recall.tolist(), "f1": f1.tolist(),
                       "support": actual.astype(int).tolist()},
        )

    def as_dict(self) -> dict:
        return {
            **{k: getattr(self, k) for k in METRIC_KEYS},
            "confusion": self.confusion.tolist(),
            "per_class": self.per_class,
            "zero_division": 0.0,
        }


def evaluate_predictions(y_true, y_pred, class_count: int) -> MetricsReport:
    return MetricsReport.from_confusion(confusion_matrix(y_true, y_pred, class_count))


def aggregate(reports: list[MetricsReport]) -> dict:
    """Mean and population std of each headline metric across runs."""
    if not reports:
        raise ValidationError("nothing to aggregate")
    out = {"runs": len(reports)}
    for k in METRIC_KEYS:
        vals = np.array([getattr(r, k) for r in reports], dtype=np.float64)
        out[k] = {"mean": float(vals.mean()), "std": float(vals.std()), "values": vals.tolist()}
    return out
