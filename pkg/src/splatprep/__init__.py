"""Scene preparation and geometric supervision toolkit for sparse-view splatting.

Stages: monocular-to-SfM depth alignment (global and per semantic region),
dense point cloud construction by back-projection, virtual camera
interpolation, 3D-warping supervision signals with occlusion masks,
rotation-aware alignment of independently registered camera sets, and
PSNR/SSIM evaluation with robustness sweeps.
"""

__version__ = "0.1.0"
