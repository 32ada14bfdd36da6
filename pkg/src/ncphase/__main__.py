"""
程序入口点 - 支持 python -m ncphase 运行
"""

from ncphase.main import app

if __name__ == "__main__":
    app()
