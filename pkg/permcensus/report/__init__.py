# coding=utf-8
"""
Report Module

Text, JSON and CSV rendering of search results for standard output.
"""

from permcensus.report.formatter import census_rows, format_census, format_mapping, format_table

__all__ = [
    "census_rows",
    "format_census",
    "format_mapping",
    "format_table",
]
