کچھ = ۲
اگر کچھ == ۱:
    لکھو("سلام دنیا")
ورنہ:
    لکھو("خدا حافظ")
