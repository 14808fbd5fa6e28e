"""Label-map cleanup and pupil/iris circle fitting.

Segmentation output is noisy: each anatomical class may come as several
fragments with ragged borders.  Cleanup keeps the largest connected
component per class and fills its convex hull, with inner classes taking
precedence over outer ones (pupil > iris > sclera).  Circle geometry is
then fitted on the cleaned map: the pupil circle sits at the pupil pixels'
center of mass with the radius of the nearest pupil boundary pixel, the
limbic circle shares that center with the radius of the farthest iris pixel.
"""

from __future__ import annotations

from dataclasses import dataclass

import cv2
import numpy as np

from .errors import DegenerateGeometry, NoIris, NoPupil
from .labelmap import EyeCapture, LabelClass


@dataclass(frozen=True)
class EyeGeometry:
    """Concentric pupil/limbus circles in source-image pixel coordinates."""

    pupil_center: tuple[float, float]  # (x, y)
    pupil_radius: float
    iris_radius: float


@dataclass(frozen=True)
class CoarseBox:
    """Inclusive axis-aligned bounding box of the iris+pupil region."""

    min_x: int
    min_y: int
    max_x: int
    max_y: int

    @property
    def width(self) -> int:
        return self.max_x - self.min_x + 1

    @property
    def height(self) -> int:
        return self.max_y - self.min_y + 1


# Pixels whose centers touch a raster disk boundary land within half a pixel
# of the true circle; a fitted radius is never reported below that extent.
MIN_PUPIL_RADIUS = 0.5


def _largest_component(mask: np.ndarray) -> np.ndarray | None:
    """Largest 8-connected component of a boolean mask.

    Ties on area break toward the component containing the smallest
    row-major pixel index, which keeps the result deterministic.
    """
    n, labels, stats, _ = cv2.connectedComponentsWithStats(
        mask.astype(np.uint8), connectivity=8
    )
    if n <= 1:
        return None
    areas = stats[1:, cv2.CC_STAT_AREA]
    best = int(np.max(areas))
    candidates = [i + 1 for i, a in enumerate(areas) if a == best]
    if len(candidates) > 1:
        flat = labels.ravel()
        candidates.sort(key=lambda lbl: int(np.argmax(flat == lbl)))
    return labels == candidates[0]


def _fill_convex_hull(component: np.ndarray) -> np.ndarray:
    """Pixels whose centers lie inside (or on) the hull of a component.

    Uses exact integer half-plane tests against the hull polygon, so the
    result is the true lattice-point hull rather than a polygon-fill
    approximation.
    """
    out = np.zeros(component.shape, dtype=bool)
    ys, xs = np.nonzero(component)
    if xs.size == 0:
        return out
    if xs.size == 1:
        out[ys[0], xs[0]] = True
        return out

    pts = np.stack([xs, ys], axis=1).astype(np.int32)
    hull = cv2.convexHull(pts).reshape(-1, 2).astype(np.int64)

    x0, x1 = int(xs.min()), int(xs.max())
    y0, y1 = int(ys.min()), int(ys.max())
    gx, gy = np.meshgrid(np.arange(x0, x1 + 1), np.arange(y0, y1 + 1))

    if len(hull) < 3:
        # Collinear component: keep lattice points exactly on the segment.
        (ax, ay), (bx, by) = hull[0], hull[-1]
        cross = (bx - ax) * (gy - ay) - (by - ay) * (gx - ax)
        inside = cross == 0
    else:
        # Orient the polygon consistently, then require every edge cross
        # product to be non-negative (boundary inclusive).
        area2 = 0
        for i in range(len(hull)):
            ax, ay = hull[i]
            bx, by = hull[(i + 1) % len(hull)]
            area2 += ax * by - bx * ay
        if area2 < 0:
            hull = hull[::-1]
        inside = np.ones(gx.shape, dtype=bool)
        for i in range(len(hull)):
            ax, ay = hull[i]
            bx, by = hull[(i + 1) % len(hull)]
            cross = (bx - ax) * (gy - ay) - (by - ay) * (gx - ax)
            inside &= cross >= 0

    out[y0 : y1 + 1, x0 : x1 + 1] = inside
    return out


def refine_labels(labels: np.ndarray) -> np.ndarray:
    """Clean a label map: one hull-filled component per anatomical class.

    For each of sclera, iris and pupil, only the largest connected
    component survives and its convex hull is filled with that class.
    Overlapping hulls resolve inner-class first (pupil over iris over
    sclera); background is the complement.  A class absent from the input
    stays absent.
    """
    labels = np.asarray(labels)
    refined = np.zeros(labels.shape, dtype=np.uint8)
    for cls in (LabelClass.SCLERA, LabelClass.IRIS, LabelClass.PUPIL):
        component = _largest_component(labels == cls)
        if component is None:
            continue
        refined[_fill_convex_hull(component)] = cls
    return refined


def fit_eye_geometry(labels: np.ndarray) -> EyeGeometry:
    """Fit concentric pupil/limbus circles on a refined label map.

    The pupil center is the centroid of pupil pixels.  The pupil radius is
    the distance to the closest pupil boundary pixel (a pupil pixel
    4-adjacent to any non-pupil pixel or the image edge); the iris radius
    is the distance to the farthest iris pixel.
    """
    labels = np.asarray(labels)
    pupil = labels == LabelClass.PUPIL
    if not pupil.any():
        raise NoPupil("label map contains no pupil pixels")
    iris_ys, iris_xs = np.nonzero(labels == LabelClass.IRIS)
    if iris_xs.size == 0:
        raise NoIris("label map contains no iris pixels")

    pup_ys, pup_xs = np.nonzero(pupil)
    cx = float(pup_xs.mean())
    cy = float(pup_ys.mean())

    # Boundary pixels: pupil pixels with a 4-neighbor outside the pupil
    # region (the image border counts as outside).
    padded = np.zeros((pupil.shape[0] + 2, pupil.shape[1] + 2), dtype=bool)
    padded[1:-1, 1:-1] = pupil
    interior = (
        padded[:-2, 1:-1] & padded[2:, 1:-1] & padded[1:-1, :-2] & padded[1:-1, 2:]
    )
    boundary = pupil & ~interior
    bys, bxs = np.nonzero(boundary)
    pupil_radius = float(np.sqrt((bxs - cx) ** 2 + (bys - cy) ** 2).min())
    pupil_radius = max(pupil_radius, MIN_PUPIL_RADIUS)

    iris_radius = float(np.sqrt((iris_xs - cx) ** 2 + (iris_ys - cy) ** 2).max())
    if iris_radius <= pupil_radius:
        raise DegenerateGeometry(
            f"iris radius {iris_radius:.2f} <= pupil radius {pupil_radius:.2f}"
        )
    return EyeGeometry(
        pupil_center=(cx, cy), pupil_radius=pupil_radius, iris_radius=iris_radius
    )


def coarse_crop(capture: EyeCapture) -> tuple[CoarseBox, np.ndarray]:
    """Tight bounding box of the iris+pupil pixels and the image crop."""
    region = (capture.labels == LabelClass.IRIS) | (capture.labels == LabelClass.PUPIL)
    ys, xs = np.nonzero(region)
    if xs.size == 0:
        raise NoIris("no iris or pupil pixels to crop")
    box = CoarseBox(
        min_x=int(xs.min()),
        min_y=int(ys.min()),
        max_x=int(xs.max()),
        max_y=int(ys.max()),
    )
    crop = capture.image[box.min_y : box.max_y + 1, box.min_x : box.max_x + 1]
    return box, crop
