"""Finite set arithmetic on hereditarily finite sets."""

from .hf import HFSet, EMPTY, decode, encode, make

__all__ = ["HFSet", "EMPTY", "decode", "encode", "make"]
