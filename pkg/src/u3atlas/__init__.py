"""Exact reconstruction and verification of finite U(3) subgroups below order 2000."""
__version__ = "0.1.0"
