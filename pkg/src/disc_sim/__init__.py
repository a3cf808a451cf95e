"""Functional and cycle-approximate model of a sparsity-aware accelerator
for transformer-based diffusion models.

Subpackages:

- ``numerics``  dense tensor primitives and the dense attention reference
- ``ctr``       token-level compute/reuse selection and selective layers
- ``st``        attention sparsity masks, SDDMM / sparse softmax / SpMM
- ``hashing``   bank-assignment hash functions and load-balance analysis
- ``simulator`` cycle-approximate core model (compute units, banks, DRAM)
- ``workload``  model configs, FLOPs accounting, end-to-end toy denoiser
- ``cli``       command-line drivers emitting CSV reports
"""

__version__ = "0.1.0"
