"""
Frenet package - 曲線、Frenet 標架、典型曲線系統與 Frenet ODE 積分器
"""
from app.core.frenet.apparatus import FrenetApparatus, frenet_apparatus, gram_schmidt_frame
from app.core.frenet.canonical import (
    CanonicalCurveParams,
    canonical_curve,
    curvatures_to_params_r3,
    params_to_curvatures,
)
from app.core.frenet.curves import (
    Curve,
    SampledCurve,
    align_rigid,
    twisted_cubic,
    twisted_cubic_curvatures,
)
from app.core.frenet.integrator import curvature_matrix, integrate_frenet_system
from app.core.frenet.io import read_sampled_curve, write_sampled_curve
from app.core.frenet.registry import BUILTIN_CURVES, builtin_curve

__all__ = [
    'Curve', 'SampledCurve', 'twisted_cubic', 'twisted_cubic_curvatures', 'align_rigid',
    'FrenetApparatus', 'frenet_apparatus', 'gram_schmidt_frame',
    'CanonicalCurveParams', 'canonical_curve', 'params_to_curvatures', 'curvatures_to_params_r3',
    'curvature_matrix', 'integrate_frenet_system',
    'read_sampled_curve', 'write_sampled_curve',
    'BUILTIN_CURVES', 'builtin_curve',
]
