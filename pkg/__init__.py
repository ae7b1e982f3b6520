"""Symbol-level precoding toolkit - NNLS precoder, ZF baseline and benchmarks."""

__version__ = "1.0.0"
