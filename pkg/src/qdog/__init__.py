"""Edge detection by difference of q-Gaussians."""
from .edges import DetectParams, detect_edges, zero_cross
from .errors import (
    DegenerateKernelError,
    DomainError,
    KernelTooLargeError,
    NonSeparableError,
    ParameterError,
    PNMError,
    QDogError,
)
from .filters import ResponseMap, convolve, convolve_separable
from .imageio import EdgeMap, GrayImage, read_pnm, write_pgm
from .kernelgen import Kernel, dog_kernel, log_kernel, sample_qgauss_kernel, support_radius
from .qmath import QParams, c_q, q_exp, qgauss_1d, qgauss_2d

__version__ = "0.1.0"
