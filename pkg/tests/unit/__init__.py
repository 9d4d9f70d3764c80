"""
Unit tests - hankel、frenet、local_svd、cli 各模組
"""
