"""scikit-learn style wrappers so the analyses drop into pipelines.

The estimators are stateless: ``fit`` only validates input and records
the classes.  ``X`` is a sequence of :class:`~akgraph.graph.Graph` objects
or graph6 strings.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .antikekule import AkKind, anti_kekule_number
from .graph import Graph
from .io import parse_graph6
from .kekule import recognize, recognize_oracle


def check_graphs(X):
    """Coerce ``X`` to a list of graphs, parsing graph6 strings."""
    if isinstance(X, (Graph, str)):
        raise TypeError("expected a sequence of graphs, got a single graph")
    out = []
    for i, x in enumerate(X):
        if isinstance(x, Graph):
            out.append(x)
        elif isinstance(x, str):
            out.append(parse_graph6(x))
        else:
            raise TypeError(f"item {i}: expected Graph or graph6 str, got {type(x).__name__}")
    return out


class SpanningTreePMClassifier(ClassifierMixin, BaseEstimator):
    """Predicts whether every spanning tree of a connected graph has a perfect matching.

    Parameters
    ----------
    cross_check : bool, default=False
        Also run the spanning-tree enumeration oracle and raise if it
        disagrees with the structural decision.
    tree_cap : int, default=10**6
        Enumeration cap for ``cross_check``.
    """

    def __init__(self, cross_check=False, tree_cap=10**6):
        self.cross_check = cross_check
        self.tree_cap = tree_cap

    def fit(self, X, y=None):
        check_graphs(X)
        self.classes_ = np.array([False, True])
        return self

    def predict(self, X):
        check_is_fitted(self, "classes_")
        return np.array([r.member for r in self.recognize(X)], dtype=bool)

    def recognize(self, X):
        """Full :class:`~akgraph.kekule.Recognition` results, with certificates or witnesses."""
        results = []
        for g in check_graphs(X):
            r = recognize(g)
            if self.cross_check and recognize_oracle(g, self.tree_cap) != r.member:
                raise AssertionError(f"oracle disagrees on {g!r}")
            results.append(r)
        return results


class AntiKekuleTransformer(TransformerMixin, BaseEstimator):
    """Maps each graph to a one-column feature: its anti-Kekule number.

    Graphs without any anti-Kekule set map to ``nan``.
    """

    def __init__(self, max_k=None):
        self.max_k = max_k

    def fit(self, X, y=None):
        check_graphs(X)
        self.n_features_out_ = 1
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_out_")
        col = []
        for g in check_graphs(X):
            res = anti_kekule_number(g, max_k=self.max_k)
            col.append(np.nan if res.kind is AkKind.NONE_EXISTS else float(res.value))
        return np.array(col, dtype=float).reshape(-1, 1)

    def get_feature_names_out(self, input_features=None):
        return np.array(["anti_kekule_number"], dtype=object)
