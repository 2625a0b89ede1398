"""Seeded random number generation for all sampling in this package.

Every sampler takes an explicit 64-bit seed and is deterministic per seed.
The generator is PCG64; independent streams for parallel work are obtained
with the documented split rule ``stream k = PCG64(seed).jumped(k)``, which
advances the state by ``k * 2**128`` steps so streams never overlap.

Gaussian variates are produced by the Box-Muller transform on PCG64
uniforms rather than numpy's ziggurat tables, so the method (though not
the bit stream) is reproducible with any uniform generator.
"""

import numpy as np

__all__ = ["generator", "standard_normals", "complex_normals"]


def generator(seed, stream=0):
    """Return a ``numpy.random.Generator`` for (seed, stream)."""
    bits = np.random.PCG64(seed)
    if stream:
        bits = bits.jumped(stream)
    return np.random.Generator(bits)


def standard_normals(gen, n):
    """Draw ``n`` N(0,1) variates via Box-Muller.

    Each uniform pair (u1, u2) yields the pair
    ``r*cos(2*pi*u2), r*sin(2*pi*u2)`` with ``r = sqrt(-2*ln(u1))``;
    u1 is mapped into (0, 1] so the logarithm is always finite.
    """
    m = (n + 1) // 2
    u1 = 1.0 - gen.random(m)
    u2 = gen.random(m)
    r = np.sqrt(-2.0 * np.log(u1))
    z = np.empty(2 * m)
    z[0::2] = r * np.cos(2.0 * np.pi * u2)
    z[1::2] = r * np.sin(2.0 * np.pi * u2)
    return z[:n]


def complex_normals(gen, shape):
    """Standard complex Gaussians: one Box-Muller pair per entry."""
    n = int(np.prod(shape))
    z = standard_normals(gen, 2 * n)
    return (z[0::2] + 1j * z[1::2]).reshape(shape)
