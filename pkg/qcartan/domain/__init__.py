"""
Exact combinatorics and q-polynomial arithmetic. Nothing in this package
touches the disk or the command line.
"""
