1+q*t+a*q
