import json
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_HEADER = "#schema=1"
QUESTIONS = ("alpha", "F", "solvability")


class CensusRecord(BaseModel):
    """Uma linha de saída do censo: os predicados calculados para um grafo."""

    graph6: str
    n: int
    connected: bool
    questions: List[str] = Field(default_factory=list)
    alpha: Optional[int] = None
    f_value: Optional[int] = None
    solvable: Optional[bool] = None
    freely_solvable: Optional[bool] = None
    freely_nbhd_solvable: Optional[bool] = None
    error: Optional[str] = None
    elapsed: float = 0.0

    def stable_dict(self) -> Dict:
        """Campos determinísticos (sem o tempo decorrido)."""
        return self.model_dump(exclude={"elapsed"})

    def to_line(self) -> str:
        return json.dumps(self.model_dump(), sort_keys=True)

    def violations(self) -> List[str]:
        """Implicações que todo registro deve satisfazer."""
        found = []
        if self.f_value is not None and self.alpha is not None and self.f_value > self.alpha:
            found.append(f"{self.graph6}: F={self.f_value} > α={self.alpha}")
        if self.freely_nbhd_solvable and not self.freely_solvable:
            found.append(f"{self.graph6}: livremente resolvível na vizinhança sem ser livremente resolvível")
        if self.freely_solvable and not self.solvable:
            found.append(f"{self.graph6}: livremente resolvível sem ser resolvível")
        return found


class SkippedLine(BaseModel):
    line_number: int
    text: str
    error: str


class CensusSummary(BaseModel):
    """Contagens agregadas; não dependem da ordem da entrada nem do número de processos."""

    total: int = 0
    connected: int = 0
    solvable: int = 0
    freely_solvable: int = 0
    freely_nbhd_solvable: int = 0
    cached: int = 0
    f_distribution: Dict[int, int] = Field(default_factory=dict)
    skipped: List[SkippedLine] = Field(default_factory=list)
    violations: List[str] = Field(default_factory=list)

    def add(self, record: CensusRecord) -> None:
        if record.error:
            return
        self.total += 1
        if not record.connected:
            return
        self.connected += 1
        self.solvable += bool(record.solvable)
        self.freely_solvable += bool(record.freely_solvable)
        self.freely_nbhd_solvable += bool(record.freely_nbhd_solvable)
        if record.f_value is not None:
            self.f_distribution[record.f_value] = self.f_distribution.get(record.f_value, 0) + 1
        self.violations += record.violations()

    def skip(self, line_number: int, text: str, error: str) -> None:
        self.skipped.append(SkippedLine(line_number=line_number, text=text, error=error))

    @property
    def nbhd_over_freely(self) -> Optional[float]:
        return self.freely_nbhd_solvable / self.freely_solvable if self.freely_solvable else None

    @property
    def nbhd_over_connected(self) -> Optional[float]:
        return self.freely_nbhd_solvable / self.connected if self.connected else None

    def threshold_report(self, threshold: float) -> Dict[str, Optional[bool]]:
        """A proporção de livremente resolvíveis na vizinhança medida contra os dois denominadores."""
        return {
            "over_freely_solvable": None if self.nbhd_over_freely is None else self.nbhd_over_freely >= threshold,
            "over_connected": None if self.nbhd_over_connected is None else self.nbhd_over_connected >= threshold,
        }

    def to_json(self, threshold: Optional[float] = None) -> str:
        data = self.model_dump()
        data["nbhd_over_freely"] = self.nbhd_over_freely
        data["nbhd_over_connected"] = self.nbhd_over_connected
        if threshold is not None:
            data["threshold"] = threshold
            data["meets_threshold"] = self.threshold_report(threshold)
        return json.dumps(data, sort_keys=True)
