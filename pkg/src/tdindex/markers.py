from enum import Enum


class Marker(Enum):
    """Explicit non-numeric outcomes. Never compared against numbers."""

    NON_COMPLIANT = "non_compliant"
    COMPLIANT = "compliant"  # compliant, exact value not claimed
    UNDEFINED = "undefined"
    NO_ORACLE = "no_oracle"

    def __str__(self) -> str:
        return self.value


NON_COMPLIANT = Marker.NON_COMPLIANT
COMPLIANT = Marker.COMPLIANT
UNDEFINED = Marker.UNDEFINED
NO_ORACLE = Marker.NO_ORACLE
