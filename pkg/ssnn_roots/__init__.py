"""
Init for the ssnn-roots app
"""
__version__ = '1.0.0'
