"""Rubber-sheet unrolling of the iris annulus and the mask-ratio quality score.

The annulus between the pupil and limbus circles maps onto a fixed-size
rectangle: columns sweep the angle counter-clockwise from the positive
x-axis, rows run from the pupil boundary (top) to the limbus (bottom).
A validity mask marks which output pixels were sampled from iris-labeled,
in-bounds source pixels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import EyeGeometry
from .labelmap import LabelClass

DEFAULT_ANGULAR_SIZE = 512
DEFAULT_RADIAL_SIZE = 64


@dataclass(frozen=True)
class NormalizedIris:
    """Unrolled iris texture with its per-pixel validity mask."""

    texture: np.ndarray  # (radial_size, angular_size) float32
    mask: np.ndarray     # (radial_size, angular_size) uint8 in {0,1}

    @property
    def angular_size(self) -> int:
        return self.texture.shape[1]

    @property
    def radial_size(self) -> int:
        return self.texture.shape[0]


def sample_coordinates(
    geometry: EyeGeometry, angular_size: int, radial_size: int
) -> tuple[np.ndarray, np.ndarray]:
    """Source (x, y) sampling grids for the rubber-sheet mapping.

    Column i samples angle 2*pi*i/angular_size; row j samples a radius
    linearly interpolated from the pupil radius (j=0) to the iris radius
    (j=radial_size-1).
    """
    theta = 2.0 * np.pi * np.arange(angular_size) / angular_size
    if radial_size > 1:
        frac = np.arange(radial_size) / (radial_size - 1)
    else:
        frac = np.zeros(1)
    radii = geometry.pupil_radius + frac * (geometry.iris_radius - geometry.pupil_radius)
    cx, cy = geometry.pupil_center
    xs = cx + radii[:, None] * np.cos(theta)[None, :]
    ys = cy + radii[:, None] * np.sin(theta)[None, :]
    return xs, ys


def _bilinear(image: np.ndarray, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    h, w = image.shape
    x0 = np.clip(np.floor(xs).astype(np.int64), 0, max(w - 2, 0))
    y0 = np.clip(np.floor(ys).astype(np.int64), 0, max(h - 2, 0))
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = xs - x0
    fy = ys - y0
    img = image.astype(np.float64)
    top = img[y0, x0] * (1 - fx) + img[y0, x1] * fx
    bot = img[y1, x0] * (1 - fx) + img[y1, x1] * fx
    return top * (1 - fy) + bot * fy


def unroll(
    image: np.ndarray,
    labels: np.ndarray,
    geometry: EyeGeometry,
    angular_size: int = DEFAULT_ANGULAR_SIZE,
    radial_size: int = DEFAULT_RADIAL_SIZE,
) -> NormalizedIris:
    """Unroll the annulus between the fitted circles into a rectangle.

    Intensity is sampled with bilinear interpolation; the mask bit of an
    output pixel is 1 only when the sample point falls inside the image and
    its nearest-neighbor label is iris.  Out-of-bounds samples read as 0
    intensity with a 0 mask bit.
    """
    image = np.asarray(image)
    labels = np.asarray(labels)
    h, w = image.shape
    xs, ys = sample_coordinates(geometry, angular_size, radial_size)

    in_bounds = (xs >= 0) & (xs <= w - 1) & (ys >= 0) & (ys <= h - 1)

    texture = np.zeros(xs.shape, dtype=np.float64)
    if in_bounds.any():
        texture[in_bounds] = _bilinear(image, xs[in_bounds], ys[in_bounds])

    # Nearest-neighbor label lookup, half-up rounding for determinism.
    nx = np.clip(np.floor(xs + 0.5).astype(np.int64), 0, w - 1)
    ny = np.clip(np.floor(ys + 0.5).astype(np.int64), 0, h - 1)
    mask = in_bounds & (labels[ny, nx] == LabelClass.IRIS)

    return NormalizedIris(
        texture=texture.astype(np.float32), mask=mask.astype(np.uint8)
    )


def compute_imr(mask: np.ndarray) -> float:
    """Iris mask ratio: fraction of the normalized grid that is valid iris."""
    mask = np.asarray(mask)
    return float(np.count_nonzero(mask)) / mask.size
