"""Eye captures and their per-pixel segmentation label maps.

A label map assigns every pixel one of four classes (background, sclera,
iris, pupil).  Captures are grayscale eye-camera frames paired with a label
map of identical dimensions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import DimensionMismatch, FileMissing, IllegalLabelValue


class LabelClass(enum.IntEnum):
    BACKGROUND = 0
    SCLERA = 1
    IRIS = 2
    PUPIL = 3


N_CLASSES = 4


@dataclass(frozen=True)
class EyeCapture:
    """One eye-camera frame with its validated segmentation labels."""

    identity_id: str
    frame_index: int
    image: np.ndarray   # (H, W) grayscale
    labels: np.ndarray  # (H, W) uint8 values in {0,1,2,3}

    @property
    def width(self) -> int:
        return self.image.shape[1]

    @property
    def height(self) -> int:
        return self.image.shape[0]


def validate_labels(labels: np.ndarray) -> np.ndarray:
    """Check a label array for out-of-range class values and return it as uint8."""
    labels = np.asarray(labels)
    if labels.ndim != 2:
        raise IllegalLabelValue(f"label map must be 2-D, got shape {labels.shape}")
    bad = (labels < 0) | (labels >= N_CLASSES)
    if bad.any():
        y, x = np.argwhere(bad)[0]
        raise IllegalLabelValue(
            f"label value {int(labels[y, x])} at (x={x}, y={y}) outside 0..{N_CLASSES - 1}"
        )
    return labels.astype(np.uint8, copy=False)


def read_gray_png(path: str | Path) -> np.ndarray:
    """Load a single-channel 8-bit image as a (H, W) uint8 array."""
    path = Path(path)
    if not path.is_file():
        raise FileMissing(str(path))
    with Image.open(path) as im:
        return np.asarray(im.convert("L"), dtype=np.uint8)


def load_capture(
    image_path: str | Path,
    label_path: str | Path,
    identity_id: str,
    frame_index: int,
) -> EyeCapture:
    """Load an image/label pair from disk and validate the contract.

    Raises FileMissing, DimensionMismatch or IllegalLabelValue.
    """
    image = read_gray_png(image_path)
    labels = validate_labels(read_gray_png(label_path))
    if image.shape != labels.shape:
        raise DimensionMismatch(
            f"image {image.shape[::-1]} vs labels {labels.shape[::-1]} "
            f"for identity={identity_id} frame={frame_index}"
        )
    return EyeCapture(
        identity_id=identity_id,
        frame_index=int(frame_index),
        image=image,
        labels=labels,
    )


def write_gray_png(path: str | Path, array: np.ndarray) -> None:
    """Write a (H, W) array as an 8-bit grayscale PNG."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(np.asarray(array, dtype=np.uint8), mode="L").save(path)


def write_bit_png(path: str | Path, bits: np.ndarray) -> None:
    """Write a (H, W) binary array as a 1-bit PNG."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray((np.asarray(bits) != 0)).convert("1").save(path)


def read_bit_png(path: str | Path) -> np.ndarray:
    """Load a 1-bit (or thresholded grayscale) PNG as a (H, W) uint8 0/1 array."""
    path = Path(path)
    if not path.is_file():
        raise FileMissing(str(path))
    with Image.open(path) as im:
        return (np.asarray(im.convert("L")) > 127).astype(np.uint8)
