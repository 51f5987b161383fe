"""
Configuration package: typed settings and logging setup.
"""
