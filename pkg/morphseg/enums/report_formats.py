from enum import Enum

class ReportFormat(str, Enum):
    """Output layout for stats and sweep reports"""
    TABLE = "table"    # aligned plain text
    JSONL = "jsonl"    # one record per line
    BOTH = "both"
