"""Triangular fuzzy numbers and expert-rating preprocessing"""
