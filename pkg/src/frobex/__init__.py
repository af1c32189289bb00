"""Extended Frobenius algebras and monoidal functors over exact cyclotomic fields."""

__version__ = "0.1.0"
