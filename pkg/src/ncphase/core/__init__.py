"""
核心层 - 引擎、上下文、异常与报告

不重导出 engine（algebra 依赖本包的 exceptions）。
"""
