"""Tests for the saturated blocker toolkit."""
