#include <cstdio>
int main(){std::puts("qtshuffle");return 0;}
