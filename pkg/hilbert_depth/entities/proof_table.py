from __future__ import annotations

from typing import Dict
from typing import List

from pydantic import BaseModel
from pydantic import Field
from pydantic import computed_field


class ProofTableRow(BaseModel):
    function: str
    values: Dict[int, int] = Field(default_factory=dict)


class ProofTable(BaseModel):
    table_id: str
    definition: str
    rows: List[ProofTableRow] = Field(default_factory=list)

    def row(self, function: str) -> ProofTableRow:
        return next(row for row in self.rows if row.function == function)


class ProofClaim(BaseModel):
    """A number printed inside a proof next to the value recomputed from its expression."""

    claim_id: str
    table_id: str
    expression: str
    printed: str
    computed: str

    @computed_field
    @property
    def matches(self) -> bool:
        return self.printed == self.computed


class TableDiff(BaseModel):
    location: str
    printed: str
    computed: str
    known_typo: bool = False


class TableCheckReport(BaseModel):
    tables: List[str] = Field(default_factory=list)
    values_checked: int = 0
    claims_checked: int = 0
    diffs: List[TableDiff] = Field(default_factory=list)
    missing_known_typos: List[str] = Field(default_factory=list)

    @property
    def unexpected(self) -> List[TableDiff]:
        return [diff for diff in self.diffs if not diff.known_typo]

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.unexpected and not self.missing_known_typos
