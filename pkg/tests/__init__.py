"""
Tests for sphere-embed
"""
