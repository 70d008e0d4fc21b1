"""
Kontsevich intersection package: command line and HTTP service.
"""
