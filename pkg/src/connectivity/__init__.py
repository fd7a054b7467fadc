"""Source-to-sink connectivity checks"""
