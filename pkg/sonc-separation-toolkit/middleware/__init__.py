from .logging_middleware import CorrelationIdFilter, StructuredCommandLogging, install_handlers

__all__ = ['CorrelationIdFilter', 'StructuredCommandLogging', 'install_handlers']
