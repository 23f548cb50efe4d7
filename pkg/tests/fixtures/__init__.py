"""Test fixtures: reference matrices and background fields."""
