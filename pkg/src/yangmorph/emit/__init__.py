from .metrics import emit_metrics
from .plantuml import emit_plantuml
from .xmi import XmiError, emit_xmi, import_xmi

__all__ = ["XmiError", "emit_metrics", "emit_plantuml", "emit_xmi", "import_xmi"]
