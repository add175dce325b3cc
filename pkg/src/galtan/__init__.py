"""galtan: exact computational algebra over finite fields.

Separable algebras and their idempotent/Pierce structure, constant Hopf
algebras and the connected-etale splitting, finite G-sets as a Galois
category, group representations with coend reconstruction, and Carboni
separable Frobenius monoids tying the two sides together.  Everything
is computed exactly over finite fields; no floating point anywhere.
"""

from galtan.kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
