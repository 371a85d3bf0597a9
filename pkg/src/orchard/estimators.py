"""scikit-learn compatible wrappers.

The estimators accept array-likes of numbers (or ``"p/q"`` strings), convert
them to exact rationals and expose the Orchard partition in the usual
fitted-attribute style, so they can sit inside pipelines, ``clone`` and
``get_params``/``set_params``.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .antipodal import AntipodalConfiguration, line_structure
from .geom import geometric_partition, separating_matrix
from .lift import basis_from_name, cgeneric_lift
from .validation import check_rational_array, to_object_array


def _labels_from_partition(partition) -> np.ndarray:
    # class of the first point is 0
    return np.array([0 if a == 1 else 1 for a in partition.alpha], dtype=int)


class OrchardPartitioner(ClusterMixin, BaseEstimator):
    """Split a generic point set into its two Orchard classes.

    Parameters
    ----------
    basis : str, default="affine"
        Function space used for separation: ``"affine"`` (hyperplanes),
        ``"circle"``, ``"conic"`` or ``"interp:<d>"``.
    verify : bool, default=False
        Cross-check the separating-count partition against the algebraic
        Orchard partition of the orientation function.

    Attributes
    ----------
    labels_ : ndarray of shape (n_samples,)
        0 for the class of the first sample, 1 for the other class.
    partition_ : TwoPartition
    separating_counts_ : ndarray of shape (n_samples, n_samples)
    configuration_ : Configuration
        The (lifted) configuration the partition was computed on.
    """

    def __init__(self, basis="affine", verify=False):
        self.basis = basis
        self.verify = verify

    def fit(self, X, y=None):
        rows = check_rational_array(X)
        self.n_features_in_ = len(rows[0])
        basis = basis_from_name(self.basis, ambient_dim=self.n_features_in_)
        config = cgeneric_lift(rows, basis)
        self.configuration_ = config
        self.partition_ = geometric_partition(config, verify=self.verify)
        self.labels_ = _labels_from_partition(self.partition_)
        if config.n >= 2:
            self.separating_counts_ = np.array(separating_matrix(config), dtype=int)
        else:
            self.separating_counts_ = np.zeros((config.n, config.n), dtype=int)
        return self


class BasisLift(TransformerMixin, BaseEstimator):
    """Map points through ``x -> (b_1(x), ..., b_d(x))`` for a named basis.

    ``transform`` returns an object array of exact Fractions. Genericity of
    the lifted points is checked in ``transform`` when ``check_generic``.
    """

    def __init__(self, basis="circle", check_generic=True):
        self.basis = basis
        self.check_generic = check_generic

    def fit(self, X, y=None):
        rows = check_rational_array(X)
        self.n_features_in_ = len(rows[0])
        self.basis_ = basis_from_name(self.basis, ambient_dim=self.n_features_in_)
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        rows = check_rational_array(X, n_features=self.n_features_in_)
        if self.check_generic:
            lifted = cgeneric_lift(rows, self.basis_).points
        else:
            lifted = [self.basis_.lift(r) for r in rows]
        return to_object_array(lifted)


class AntipodalOrchard(BaseEstimator):
    """Orchard structure of a set of lines through the origin.

    Each row of ``X`` is a direction vector. After ``fit``:

    ``parity_`` is +1 when the lines carry a two-partition and -1 when
    they carry a semi-orientation. ``labels_`` gives the class (0/1) of
    each line in the even case; in the odd case it gives the sign (+1/-1)
    to apply to each stored row to obtain one of the two sections.
    """

    def __init__(self, canonicalize=True):
        self.canonicalize = canonicalize

    def fit(self, X, y=None):
        rows = check_rational_array(X)
        self.n_features_in_ = len(rows[0])
        self.configuration_ = AntipodalConfiguration.make(rows, canonicalize=self.canonicalize)
        self.partition_ = line_structure(self.configuration_)
        self.parity_ = self.partition_.parity
        signs = np.array(self.partition_.signs, dtype=int)
        self.labels_ = signs if self.parity_ == -1 else (signs == -1).astype(int)
        return self

    def sections(self):
        """The two sections as object arrays of vectors (odd case only)."""
        check_is_fitted(self, "partition_")
        if self.parity_ != -1:
            raise ValueError("the lines carry a two-partition, not a semi-orientation")
        reps = self.configuration_.reps
        plus = [tuple(int(s) * v for v in r) for s, r in zip(self.labels_, reps)]
        minus = [tuple(-v for v in r) for r in plus]
        return to_object_array(plus), to_object_array(minus)
