"""Integer-wavelet image steganography.

Hides the lookup keys of two grayscale secret images inside one color
cover image. See the package README for the full pipeline description.
"""

from ._core import (
    COVER_MARGIN,
    StegoError,
    build_key,
    decode,
    encode,
    iwt_forward,
    iwt_inverse,
    mse,
    psnr,
    reconstruct_ll,
    rgb_to_ycc,
    ycc_to_rgb,
)

# _core raises StegoError(message, code_name); surface the name as .code.
StegoError.code = property(
    lambda self: self.args[1] if len(self.args) > 1 else None
)

__all__ = [
    "COVER_MARGIN",
    "StegoError",
    "build_key",
    "decode",
    "encode",
    "iwt_forward",
    "iwt_inverse",
    "mse",
    "psnr",
    "reconstruct_ll",
    "rgb_to_ycc",
    "ycc_to_rgb",
]

__version__ = "1.0.0"
