"""Masked-sketch semantic video codec."""

from ._core import (
    MsvError,
    compose_frame,
    compose_static_background,
    decode_video,
    encode_video,
    extract_sketch,
    instance_iou,
    mask_difference,
    mask_intersection,
    mask_sketch,
    mask_union,
    psnr,
    reconstruct_sketch,
    sign_mask,
    ssim,
    synth_video,
    translate_frame,
    warp,
)

__version__ = "0.1.0"

__all__ = [
    "MsvError",
    "compose_frame",
    "compose_static_background",
    "decode_video",
    "encode_video",
    "extract_sketch",
    "instance_iou",
    "mask_difference",
    "mask_intersection",
    "mask_sketch",
    "mask_union",
    "psnr",
    "reconstruct_sketch",
    "sign_mask",
    "ssim",
    "synth_video",
    "translate_frame",
    "warp",
]
