"""
Local SVD package - 局部共變異矩陣、Jacobi 特徵分解與曲率估計
"""
from app.core.local_svd.covariance import (
    CovarianceMatrix,
    checkerboard_blocks,
    covariance_mean_centered,
    covariance_on_curve,
    discrete_covariance,
    surrogate_covariance,
    taylor_moment_matrix,
)
from app.core.local_svd.eigen import symmetric_eigen
from app.core.local_svd.estimator import (
    CurvatureEstimate,
    CurvatureEstimator,
    LocalSpectrum,
    eps_ladder,
    estimate_curvatures,
    estimate_frame,
    fit_leading_coefficients,
    local_spectrum,
    orient_frame,
)
from app.core.local_svd.quadrature import gauss_legendre, window_rule

__all__ = [
    'CovarianceMatrix', 'covariance_on_curve', 'covariance_mean_centered', 'discrete_covariance',
    'taylor_moment_matrix', 'surrogate_covariance', 'checkerboard_blocks',
    'symmetric_eigen', 'gauss_legendre', 'window_rule',
    'LocalSpectrum', 'CurvatureEstimate', 'CurvatureEstimator',
    'eps_ladder', 'fit_leading_coefficients', 'local_spectrum',
    'estimate_curvatures', 'estimate_frame', 'orient_frame',
]
