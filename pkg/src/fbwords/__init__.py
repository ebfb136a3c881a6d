"""Fully bordered binary words."""
