"""Network topology and state types"""
