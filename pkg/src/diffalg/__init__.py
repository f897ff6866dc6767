"""Exact symbolic differential-algebra toolkit."""
