# مربع اور جفت
تعریف مربع(ن):
    واپس ن * ن

کل = ۰
جو عدد اندر حد(۱، ۱۱):
    اگر عدد % ۲ == ۰:
        کل = کل + مربع(عدد)
    ورنہاگر عدد == ۵:
        لکھو("پانچ")
    ورنہ:
        جاری
لکھو(کل)
لکھو(لمبائی([حق، باطل، کچھنہیں]))
