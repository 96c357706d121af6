"""Tests for alm_morph package."""
