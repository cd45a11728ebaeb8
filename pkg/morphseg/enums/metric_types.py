from enum import Enum

class MetricType(str, Enum):
    BLEU = "bleu"
    CHRF3 = "chrf3"
