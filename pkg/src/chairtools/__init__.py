"""Decision-support toolkit for programme committee chairs.

Turns submission metadata and reviewer publication records into word
clouds, topic-coverage gap reports, and reviewer-suggestion rankings.
"""

__version__ = "0.1.0"
