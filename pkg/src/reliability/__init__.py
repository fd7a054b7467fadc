"""Exact and sampled reliability"""
