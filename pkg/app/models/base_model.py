from dataclasses import fields
from typing import Any, Dict

import numpy as np


class BaseModel:
    """Base class for the immutable domain values (all declared as frozen dataclasses)"""

    def to_dict(self) -> Dict[str, Any]:
        """Convert the value to a dictionary of its declared fields"""
        return {f.name: getattr(self, f.name) for f in fields(self)}  # type: ignore[arg-type]

    def __repr__(self) -> str:
        """String representation without dumping arrays"""
        parts = []
        for name, value in self.to_dict().items():
            if isinstance(value, np.ndarray):
                parts.append(f"{name}=<{'x'.join(str(s) for s in value.shape)}>")
            else:
                parts.append(f"{name}={value!r}")
        return f"<{self.__class__.__name__}({', '.join(parts)})>"
