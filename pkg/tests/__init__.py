"""
Tests package - Frenet 局部 SVD 曲率分析庫測試
"""
